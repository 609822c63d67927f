use std::io;

fn main() {
    let code = privacy_metrics::cli::run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout(),
        &mut io::stderr(),
    );
    std::process::exit(code);
}
