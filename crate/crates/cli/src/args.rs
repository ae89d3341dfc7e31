use clap::{Args, Parser, Subcommand, ValueEnum};
use ctgf::BigUint;

#[derive(Parser, Debug)]
#[command(
    name = "ctgf",
    version,
    about = "Generating functions from constant terms of bivariate rational products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Two pockets of coins whose values differ by --diff
    Pockets(PocketsArgs),
    /// Almkvist's psi_n(t)
    Psi(PsiArgs),
    /// Coefficient of z^diff in P(z)/(prod (1-t z^a) prod (1-t/z^b))
    Gf(GfArgs),
    /// Write the sequence in OEIS b-file format
    Bfile(BfileArgs),
}

#[derive(Args, Debug, Clone)]
pub struct PocketsArgs {
    /// Left pocket denominations, comma separated (repeats allowed)
    #[arg(long, value_parser = parse_positive_list, default_value = "")]
    pub left: List,
    /// Right pocket denominations
    #[arg(long, value_parser = parse_positive_list, default_value = "")]
    pub right: List,
    /// Left total minus right total
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub diff: i64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct PsiArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    pub n: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GfArgs {
    /// Laurent numerator as minExp:c0,c1,... (coefficients may be p/q)
    #[arg(long, default_value = "0:1", allow_hyphen_values = true)]
    pub numerator: String,
    /// Exponents a of the factors (1 - t z^a); 0 contributes 1/(1-t)
    #[arg(long, value_parser = parse_list, default_value = "")]
    pub left: List,
    /// Exponents b of the factors (1 - t z^-b)
    #[arg(long, value_parser = parse_list, default_value = "")]
    pub right: List,
    /// Exponent of z to extract
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub diff: i64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct BfileArgs {
    /// Use psi_n instead of a pocket problem
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..), conflicts_with_all = ["left", "right", "diff"])]
    pub n: Option<u32>,
    #[arg(long, value_parser = parse_positive_list, default_value = "")]
    pub left: List,
    #[arg(long, value_parser = parse_positive_list, default_value = "")]
    pub right: List,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub diff: i64,
    /// Number of terms, starting at index 0
    #[arg(long, default_value_t = 31)]
    pub terms: usize,
    /// Destination file; standard output when absent
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Number of series coefficients to print
    #[arg(long, default_value_t = 31)]
    pub terms: usize,
    /// Evaluate a(n) exactly; accepts decimal or 1e100-style input; repeatable
    #[arg(long = "eval", value_parser = parse_index)]
    pub evals: Vec<BigUint>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Comma-separated exponent list; the empty string is the empty list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct List(pub Vec<u64>);

fn parse_list(s: &str) -> Result<List, String> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<u64>()
                .map_err(|_| format!("not a nonnegative integer: {p:?}"))
        })
        .collect::<Result<_, _>>()
        .map(List)
}

fn parse_positive_list(s: &str) -> Result<List, String> {
    let v = parse_list(s)?;
    if v.0.contains(&0) {
        return Err("denominations must be positive".into());
    }
    Ok(v)
}

/// Parses `123`, `1e100` or `25e3` into an exact nonnegative integer.
pub fn parse_index(s: &str) -> Result<BigUint, String> {
    let bad = || format!("not a nonnegative integer: {s:?}");
    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<u32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    if mantissa.is_empty() || !mantissa.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let m: BigUint = mantissa.parse().map_err(|_| bad())?;
    Ok(m * BigUint::from(10u32).pow(exponent))
}
