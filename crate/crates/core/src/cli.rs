//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid certificate, 2 incomplete coverage,
//! 3 invalid arguments, 4 search guard exceeded.

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arithmetic::{bounded_bezout, conflict_values};
use crate::certificate::{
    to_json, Certificate, CertificateDoc, CoverReportDoc, Family, SpectrumReportDoc,
};
use crate::coverage::{
    crown_valence_lower_bound, cycle_valence_lower_bound, em_interval, perfect_em_cover,
    perfect_sem_cover, prime_power_cover, sem_interval, CrownConstructor, Mode,
};
use crate::error::Error;
use crate::oracle::{brute_spectrum, Guard};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_CERTIFICATE: i32 = 1;
pub const EXIT_INCOMPLETE: i32 = 2;
pub const EXIT_BAD_ARGS: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

/// Environment variable overriding the worker thread count.
pub const THREADS_ENV: &str = "MAGIC_CROWNS_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "magic-crowns",
    version,
    about = "Edge-magic labelings of crowns, cycles and looped stars"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Crown,
    Cycle,
    #[value(name = "star_loop", alias = "star-loop")]
    StarLoop,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Sem,
    Em,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Sem => Mode::Sem,
            ModeArg::Em => Mode::Em,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the super edge-magic or edge-magic interval of a graph.
    Intervals {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        mode: ModeArg,
    },
    /// Build one labeling of C_m ⊙ K̄_n (odd m) with the given valence.
    Generate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        valence: usize,
        /// Defaults to sem when the valence lies in the super interval.
        #[arg(long)]
        mode: Option<ModeArg>,
    },
    /// Certificates for every valence of C_{p^k q} ⊙ K̄_n.
    Cover {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mode: ModeArg,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Check a certificate or cover report ("-" reads standard input).
    Verify { file: String },
    /// Exhaustive valence spectrum of a small graph.
    Spectrum {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        mode: ModeArg,
        /// Largest number of candidate assignments to enumerate.
        #[arg(long)]
        guard: Option<u128>,
    },
    /// Bounded Bézout data for two distinct odd primes.
    Bezout {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Conflict values of p^k q.
    Conflicts {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        q: u64,
    },
    /// Guaranteed number of edge-magic valences.
    Bound {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: Option<usize>,
        /// Bound for C_m instead of C_m ⊙ K̄_n.
        #[arg(long)]
        cycle: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::InvalidInput(_) | Error::NotACrownShape(_) => EXIT_BAD_ARGS,
            Error::GuardExceeded { .. } => EXIT_GUARD,
            Error::Construction(_) => EXIT_INCOMPLETE,
            Error::InvalidCertificate(_)
            | Error::NotBijective { .. }
            | Error::NonConstantValence { .. }
            | Error::NotConsecutiveSums { .. } => EXIT_INVALID_CERTIFICATE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn fail<T>(code: i32, message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure {
        code,
        message: message.into(),
    })
}

fn family(kind: FamilyArg, m: Option<usize>, n: Option<usize>) -> Result<Family, Failure> {
    let f = match (kind, m, n) {
        (FamilyArg::Crown, Some(m), Some(n)) => Family::Crown { m, n },
        (FamilyArg::Cycle, Some(m), None) => Family::Cycle { m },
        (FamilyArg::StarLoop, None, Some(n)) => Family::StarLoop { n },
        (FamilyArg::Crown, ..) => return fail(EXIT_BAD_ARGS, "crown needs --m and --n"),
        (FamilyArg::Cycle, ..) => return fail(EXIT_BAD_ARGS, "cycle needs --m only"),
        (FamilyArg::StarLoop, ..) => return fail(EXIT_BAD_ARGS, "star_loop needs --n only"),
    };
    f.validate()?;
    Ok(f)
}

fn json_line<T: Serialize>(value: &T) -> String {
    to_json(value)
}

struct Output {
    stdout: String,
    stderr: String,
    code: i32,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }
}

fn execute(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Intervals {
            family: f,
            m,
            n,
            mode,
        } => {
            let g = family(f, m, n)?.graph()?;
            let interval = match mode.into() {
                Mode::Sem => sem_interval(&g)?,
                Mode::Em => em_interval(&g)?,
            };
            Ok(Output::ok(format!("{interval}\n")))
        }
        Command::Generate {
            m,
            n,
            valence,
            mode,
        } => {
            let c = CrownConstructor::for_crown(m, n)?;
            let mode = mode
                .map(Mode::from)
                .unwrap_or(if c.sem_interval().contains(valence) {
                    Mode::Sem
                } else {
                    Mode::Em
                });
            let interval = match mode {
                Mode::Sem => c.sem_interval(),
                Mode::Em => c.em_interval(),
            };
            if !interval.contains(valence) {
                return fail(
                    EXIT_BAD_ARGS,
                    format!("valence {valence} lies outside the {mode} interval {interval}"),
                );
            }
            match c.labeling(valence, mode)? {
                Some(cert) => Ok(Output {
                    stdout: cert.to_json(),
                    stderr: format!("built from {}\n", cert.source()),
                    code: EXIT_OK,
                }),
                None => fail(
                    EXIT_INCOMPLETE,
                    format!("no construction reaches valence {valence}"),
                ),
            }
        }
        Command::Cover {
            p,
            q,
            k,
            n,
            mode,
            out,
        } => {
            let mode = Mode::from(mode);
            let cover = match (k, mode) {
                (1, Mode::Sem) => perfect_sem_cover(p, q, n)?,
                (1, Mode::Em) => perfect_em_cover(p, q, n)?,
                _ => prime_power_cover(p, k, q, n, mode)?,
            };
            let text = json_line(&CoverReportDoc::from_cover(&cover));
            let mut stderr = format!(
                "{}: {} of {} valences in {}, missing {:?}\n",
                cover.family,
                cover.achieved.len(),
                cover.interval.len(),
                cover.interval,
                cover.missing
            );
            let stdout = match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &text) {
                        return fail(
                            EXIT_BAD_ARGS,
                            format!("cannot write {}: {e}", path.display()),
                        );
                    }
                    stderr.push_str(&format!("wrote {}\n", path.display()));
                    String::new()
                }
                None => text,
            };
            let code = if cover.is_perfect() {
                EXIT_OK
            } else {
                EXIT_INCOMPLETE
            };
            Ok(Output {
                stdout,
                stderr,
                code,
            })
        }
        Command::Verify { file } => verify_file(&file),
        Command::Spectrum {
            family: f,
            m,
            n,
            mode,
            guard,
        } => {
            let fam = family(f, m, n)?;
            let mode = Mode::from(mode);
            let guard = guard.map(Guard::new).unwrap_or(Guard::default_for(mode));
            let report = brute_spectrum(&fam.graph()?, mode, guard)?;
            Ok(Output::ok(json_line(&SpectrumReportDoc::from_report(
                fam, &report,
            )?)))
        }
        Command::Bezout { p, q } => Ok(Output::ok(json_line(&bounded_bezout(p, q)?))),
        Command::Conflicts { p, k, q } => {
            let values = conflict_values(p, k, q)?;
            Ok(Output::ok(json_line(
                &json!({"p": p, "k": k, "q": q, "values": values}),
            )))
        }
        Command::Bound { m, n, cycle } => {
            let value = match (cycle, n) {
                (true, None) => json!({"m": m, "bound": cycle_valence_lower_bound(m)?}),
                (false, Some(n)) => {
                    json!({"m": m, "n": n, "bound": crown_valence_lower_bound(m, n)?})
                }
                (true, Some(_)) => return fail(EXIT_BAD_ARGS, "--cycle takes no --n"),
                (false, None) => return fail(EXIT_BAD_ARGS, "crown bound needs --n"),
            };
            Ok(Output::ok(json_line(&value)))
        }
    }
}

fn verify_file(file: &str) -> Result<Output, Failure> {
    let mut text = String::new();
    let read = if file == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(file).map(|t| text = t)
    };
    if let Err(e) = read {
        return fail(EXIT_BAD_ARGS, format!("cannot read {file}: {e}"));
    }
    let value: Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return fail(EXIT_INVALID_CERTIFICATE, format!("malformed JSON: {e}")),
    };
    let malformed = |e: serde_json::Error| Failure {
        code: EXIT_INVALID_CERTIFICATE,
        message: format!("malformed document: {e}"),
    };
    if value.get("certificates").is_some() {
        let doc: CoverReportDoc = serde_json::from_value(value).map_err(malformed)?;
        let certs = doc.verify().map_err(|e| Failure {
            code: EXIT_INVALID_CERTIFICATE,
            message: e.to_string(),
        })?;
        let msg = format!(
            "ok: {} {} cover, {} certificates verified, {} missing\n",
            doc.graph,
            doc.mode,
            certs.len(),
            doc.missing.len()
        );
        return Ok(Output::ok(msg));
    }
    let doc: CertificateDoc = serde_json::from_value(value).map_err(malformed)?;
    let cert: Certificate = doc.verify().map_err(|e| Failure {
        code: EXIT_INVALID_CERTIFICATE,
        message: e.to_string(),
    })?;
    Ok(Output::ok(format!(
        "ok: {} labeling of {} with valence {}\n",
        cert.kind(),
        cert.family(),
        cert.valence()
    )))
}

/// Parses `args` (program name first) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_BAD_ARGS
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.stdout.as_bytes());
            let _ = err.write_all(o.stderr.as_bytes());
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
