fn main() {
    let caps = std::env::var(qsub::config::CAPS_VAR).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = qsub::cli::run(std::env::args_os(), caps.as_deref(), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
