fn main() {
    // Die quietly on closed pipes (`gnbmul scan ... | head`) instead of
    // panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(gnbmul::cli::run(std::env::args_os()));
}
