use clap::Parser;

fn main() {
    let cli = segre_cli::Cli::parse();
    let code = segre_cli::run(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
