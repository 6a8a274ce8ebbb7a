use std::io::Write;

fn main() -> anyhow::Result<()> {
    let (code, out) = supermorita::cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(out.as_bytes())?;
    stdout.flush()?;
    std::process::exit(code);
}
