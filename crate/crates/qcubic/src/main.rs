fn main() {
    // Die quietly when the output pipe closes early (e.g. `qcubic list | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(qcubic::cli::run(std::env::args()));
}
