use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use deligne_core::characters::{
    chr_l_explicit, chr_l_generic, chr_verma, denominator_inverse, garland_terms, most_negative, series_mul,
};
use deligne_core::dimensions::{dim_expr, evaluate_dim, nekrasov_okounkov_check};
use deligne_core::finite_oracle::{bipartition_to_rational_weight, finite_tensor, weyl_dim_gl};
use deligne_core::stable_ring::stable_tensor;
use deligne_core::{Bipartition, CaseTag, CharacterSeries, Error, Partition};
use num_rational::BigRational;

use deligne_cli::OutputRecord;

#[derive(Parser)]
#[command(name = "deligne", version, about = "Stable affine characters in rep(GL_t)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PathChoice {
    Explicit,
    Generic,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Character of the simple module L([μ,ν] + kΛ₀)
    #[command(name = "charL", alias = "char-l")]
    CharL {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        nu: String,
        #[arg(long)]
        level: i64,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value = "explicit")]
        path: PathChoice,
    },
    /// Inverse of the Verma character of the trivial weight
    Denominator {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Stable Garland cohomology in one degree
    Garland {
        #[arg(long)]
        degree: usize,
    },
    /// Stable tensor product of two bipartitions written `LEFT;RIGHT`
    Tensor {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Categorical dimension of L_[μ,ν], optionally evaluated at t = P/Q
    Dim {
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, default_value = "")]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// Check the hook-length identity through q^order
    Nekrasov {
        #[arg(long)]
        order: usize,
    },
    /// Finite-rank GL_n ground truth
    #[command(hide = true)]
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: Option<String>,
    },
}

/// A failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInconsistency(_) | Error::NotARepresentation(_) => {
                Failure::internal(e.to_string())
            }
            _ => Failure::input(e.to_string()),
        }
    }
}

fn partition(text: &str) -> Result<Partition, Failure> {
    text.parse().map_err(Failure::from)
}

fn bipartition(text: &str) -> Result<Bipartition, Failure> {
    let (left, right) = text
        .split_once(';')
        .ok_or_else(|| Failure::input(format!("bipartition {text:?} must be written LEFT;RIGHT")))?;
    Ok(Bipartition::new(partition(left.trim())?, partition(right.trim())?))
}

fn check_nonnegative(s: &CharacterSeries) -> Result<(), Failure> {
    match most_negative(s) {
        Some((q, b, m)) => Err(Failure::internal(format!("negative multiplicity {m} for {b} at q^{q}"))),
        None => Ok(()),
    }
}

fn render(s: &CharacterSeries, format: Format, title: &str, paths_agree: Option<bool>) -> String {
    match format {
        Format::Json => {
            let mut record = OutputRecord::from_series(CaseTag::GL, s);
            record.paths_agree = paths_agree;
            record.to_json() + "\n"
        }
        Format::Text => {
            let mut out = format!("{title}\n{s}");
            if paths_agree == Some(true) {
                out.push_str("paths: explicit = generic\n");
            }
            out
        }
    }
}

fn char_l(
    mu: &str,
    nu: &str,
    level: i64,
    order: usize,
    format: Format,
    path: PathChoice,
) -> Result<String, Failure> {
    let (mu, nu) = (partition(mu)?, partition(nu)?);
    let (series, agree) = match path {
        PathChoice::Explicit => (chr_l_explicit(&mu, &nu, level, order)?, None),
        PathChoice::Generic => (chr_l_generic(&mu, &nu, level, order)?, None),
        PathChoice::Both => {
            let explicit = chr_l_explicit(&mu, &nu, level, order)?;
            let generic = chr_l_generic(&mu, &nu, level, order)?;
            if let Some(q) = (0..=order).find(|&q| explicit.coeff(q) != generic.coeff(q)) {
                return Err(Failure::internal(format!(
                    "path mismatch at q^{q}: explicit {} vs generic {}",
                    explicit.coeff(q),
                    generic.coeff(q)
                )));
            }
            (explicit, Some(true))
        }
    };
    check_nonnegative(&series)?;
    let title = format!("chr L({} + {level}Λ0) through q^{order}", Bipartition::new(mu, nu));
    Ok(render(&series, format, &title, agree))
}

fn nekrasov(order: usize) -> Result<String, Failure> {
    let rows = nekrasov_okounkov_check(order);
    if rows.iter().all(|(_, l, r)| l == r) {
        return Ok(format!("PASS q^0..q^{order}\n"));
    }
    let report: String = rows
        .iter()
        .map(
            |(n, l, r)| {
                if l == r {
                    format!("PASS q^{n}\n")
                } else {
                    format!("FAIL q^{n}: lhs = {l}, rhs = {r}\n")
                }
            },
        )
        .collect();
    Err(Failure::internal(report.trim_end()))
}

fn oracle(n: usize, a: &str, b: Option<&str>) -> Result<String, Failure> {
    let wa = bipartition_to_rational_weight(&bipartition(a)?, n)?;
    let Some(b) = b else {
        return Ok(format!("{wa}: dim {}\n", weyl_dim_gl(n, &wa)?));
    };
    let wb = bipartition_to_rational_weight(&bipartition(b)?, n)?;
    Ok(finite_tensor(n, &wa, &wb)?.iter().map(|(w, m)| format!("{m} {w}\n")).collect())
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::CharL { mu, nu, level, order, format, path } => char_l(&mu, &nu, level, order, format, path),
        Command::Denominator { order, format } => {
            let inverse = denominator_inverse(order);
            let product = series_mul(&chr_verma(&Bipartition::trivial(), 0, order), &inverse);
            if product != CharacterSeries::one(order) {
                return Err(Failure::internal("chr M(0) times its inverse is not 1"));
            }
            Ok(render(&inverse, format, &format!("1/chr M(0) through q^{order}"), None))
        }
        Command::Garland { degree } => {
            let terms: Vec<String> = garland_terms(degree).iter().map(ToString::to_string).collect();
            Ok(terms.join(" + ") + "\n")
        }
        Command::Tensor { a, b } => Ok(format!("{}\n", stable_tensor(&bipartition(&a)?, &bipartition(&b)?))),
        Command::Dim { mu, nu, t } => {
            let expr = dim_expr(&partition(&mu)?, &partition(&nu)?)?;
            match t {
                None => Ok(format!("{expr}\n")),
                Some(t) => {
                    let t: BigRational = t
                        .trim()
                        .parse()
                        .map_err(|_| Failure::input(format!("invalid rational {t:?}, expected P/Q")))?;
                    Ok(format!("{}\n", evaluate_dim(&expr, &t)))
                }
            }
        }
        Command::Nekrasov { order } => nekrasov(order),
        Command::Oracle { n, a, b } => oracle(n, &a, b.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
