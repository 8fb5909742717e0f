//! `welded`: command-line front end for the truncated braid algebras.

mod report;
mod series_file;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use welded_core::associator::{check_axiom, check_equivalences, check_yang_baxter, extend_to_degree, Axiom};
use welded_core::invariants::{
    check_splitting_identity, delta_kernel_with_limit, distinguish, hilbert_row, vassiliev_degree, DELTA_WORD_LIMIT,
};
use welded_core::represent::{Family, Representation};
use welded_core::{
    Alphabet, BasisStore, GroupRingElement, RelationPreset, SemidirectSeries, TruncatedSeries, WeldedWord,
};

use report::Report;

#[derive(Parser)]
#[command(
    name = "welded",
    version,
    about = "Exact truncated algebra for braids, welded braids and associators"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Number of strands.
    #[arg(long, global = true, default_value_t = 3)]
    n: usize,
    /// Truncation degree; commands reading a series file default to its header.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Relation preset: artin, oriented, upper, free-chord, free-oriented, free-ab.
    #[arg(long, global = true)]
    preset: Option<String>,
    /// Directory for cached quotient bases.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Welded,
    Drinfeld,
    Rho3,
}

#[derive(Subcommand)]
enum Command {
    /// Graded dimensions of a quotient algebra.
    Dim,
    /// Reduce a series to normal form.
    NormalForm {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        series: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Evaluate a word under one of the representations.
    Eval {
        #[arg(long, value_enum, default_value_t = FamilyName::Welded)]
        family: FamilyName,
        #[arg(long)]
        word: String,
        /// Series file with the associator parameter for drinfeld and rho3.
        #[arg(long)]
        assoc: Option<PathBuf>,
    },
    /// Check associator axioms of a series in A, B.
    CheckAssociator {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "AE,AS,H1,H3,P")]
        axioms: Vec<Axiom>,
    },
    /// Extend a semi-associator degree by degree.
    ExtendAssociator {
        /// Starting series; defaults to 1 at cap 1.
        #[arg(long)]
        from: Option<PathBuf>,
        #[arg(long)]
        to_degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the Yang-Baxter form of the three-strand family and its equivalences.
    CheckYb {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Compare two welded words through their images and the free-group oracle.
    Distinguish {
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
    },
    /// Order of a group-ring element under the welded representation.
    VassilievDegree {
        /// For example `1*[sig1] - 1*[s1]`.
        #[arg(long)]
        element: String,
    },
    /// Kernel of the doubling map from the chord to the oriented algebra.
    DeltaKernel {
        /// A single degree; defaults to every degree up to the cap.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = DELTA_WORD_LIMIT)]
        limit: u64,
    },
    /// Chord and oriented dimensions side by side.
    HilbertTable,
    /// Check that permutation parts do not change orders of basis-conjugating words.
    CheckSplitting {
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Session {
    g: Global,
    store: BasisStore,
}

impl Session {
    fn cap(&self, default: usize) -> usize {
        self.g.cap.unwrap_or(default)
    }

    fn preset(&self, default: &str) -> Result<RelationPreset> {
        let name = self.g.preset.as_deref().unwrap_or(default);
        Ok(RelationPreset::from_name(name, self.g.n)?)
    }

    fn associator(&self, path: &Path) -> Result<TruncatedSeries> {
        series_file::read(path, &Alphabet::ab(), self.g.cap)
    }
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn components(x: &SemidirectSeries) -> Value {
    let map: Map<String, Value> = x
        .terms()
        .map(|(p, g)| (p.to_string(), Value::from(g.to_string())))
        .collect();
    Value::Object(map)
}

fn run(cx: &Session, command: Command) -> Result<Vec<Report>> {
    let n = cx.g.n;
    let reports = match command {
        Command::Dim => {
            let cap = cx.cap(4);
            let preset = cx.preset("artin")?;
            let dims = cx.store.get(preset.clone(), cap)?.dimensions();
            let mut r = Report::new("dim").input("preset", preset.to_string()).input("cap", cap);
            r.degrees = (0..=cap).collect();
            r.values = json!({ "dims": dims });
            r.text = format!("{preset}: {}", strings(&dims).join(" "));
            vec![r]
        }
        Command::NormalForm { series, input } => {
            let preset = cx.preset("artin")?;
            let al = preset.alphabet();
            let s = match (series, &input) {
                (Some(text), _) => TruncatedSeries::parse(&text, &al, cx.cap(3))?,
                (None, Some(path)) => series_file::read(path, &al, cx.g.cap)?,
                (None, None) => bail!("give --series or --in"),
            };
            let basis = cx.store.get(preset.clone(), s.cap())?;
            let nf = basis.normal_form(&s)?;
            let mut r = Report::new("normal-form")
                .input("preset", preset.to_string())
                .input("cap", s.cap())
                .input("series", s.to_string());
            r.degrees = (0..=s.cap()).filter(|&k| !nf.homogeneous(k).is_zero()).collect();
            r.values = json!({ "normal_form": nf.to_string() });
            r.text = nf.to_string();
            vec![r]
        }
        Command::Eval { family, word, assoc } => {
            let cap = cx.cap(3);
            let w = WeldedWord::parse(&word, n)?;
            let param = |name: &str| -> Result<TruncatedSeries> {
                let path = assoc
                    .as_ref()
                    .with_context(|| format!("--assoc is required for {name}"))?;
                cx.associator(path)
            };
            let family = match family {
                FamilyName::Welded => Family::Welded,
                FamilyName::Drinfeld => Family::Drinfeld(param("drinfeld")?),
                FamilyName::Rho3 => Family::Rho3(param("rho3")?),
            };
            let basis = cx.store.get(family.preset(n), cap)?;
            let rep = Representation::new(family.clone(), &basis, cap)?;
            let img = rep.eval(&w)?;
            let mut r = Report::new("eval")
                .input("family", family.name())
                .input("n", n)
                .input("cap", cap)
                .input("word", w.to_string());
            r.degrees = (0..=cap).collect();
            r.values = json!({ "image": img.to_string(), "components": components(&img) });
            r.text = img.to_string();
            vec![r]
        }
        Command::CheckAssociator { input, axioms } => {
            let phi = cx.associator(&input)?;
            let cap = cx.cap(phi.cap());
            let mut r = Report::new("check-associator")
                .input("file", input.display().to_string())
                .input("cap", cap)
                .input("axioms", strings(&axioms));
            r.degrees = (1..=cap).collect();
            let mut values = Map::new();
            let mut lines = Vec::new();
            for a in axioms {
                let v = check_axiom(&phi, a, cap, &cx.store)?;
                r.passed &= v.passed();
                values.insert(
                    a.to_string(),
                    json!({
                        "passed": v.passed(),
                        "failing_degree": v.failing_degree,
                        "residual": v.residual.to_string(),
                    }),
                );
                lines.push(v.to_string());
            }
            r.values = Value::Object(values);
            r.text = lines.join("\n");
            vec![r]
        }
        Command::ExtendAssociator { from, to_degree, out } => {
            let start = match &from {
                Some(path) => cx.associator(path)?,
                None => TruncatedSeries::one(Alphabet::ab(), 1),
            };
            let (phi, kernels) = extend_to_degree(&start, to_degree, &cx.store)?;
            let notes: Vec<String> = kernels
                .iter()
                .map(|(d, k)| format!("degree {d}: kernel dimension {k}"))
                .collect();
            if let Some(path) = &out {
                series_file::write(path, &phi, &notes)?;
            }
            let mut r = Report::new("extend-associator")
                .input("from_cap", start.cap())
                .input("to_degree", to_degree);
            if let Some(path) = &out {
                r = r.input("out", path.display().to_string());
            }
            r.degrees = kernels.iter().map(|(d, _)| *d).collect();
            let kernel_dims: Map<String, Value> =
                kernels.iter().map(|(d, k)| (d.to_string(), Value::from(*k))).collect();
            r.values = json!({ "series": phi.to_string(), "kernel_dims": kernel_dims });
            r.text = match &out {
                Some(path) => format!("{}\nwrote {}", notes.join("\n"), path.display()),
                None => series_file::render(&phi, &notes).trim_end().to_string(),
            };
            vec![r]
        }
        Command::CheckYb { input } => {
            let psi = cx.associator(&input)?;
            let cap = cx.cap(psi.cap());
            let yb = check_yang_baxter(&psi, cap, &cx.store)?;
            let report = check_equivalences(&psi, cap, &cx.store)?;
            let mut r = Report::new("check-yb")
                .input("file", input.display().to_string())
                .input("cap", cap);
            r.passed = yb.passed() && report.consistent();
            r.degrees = (1..=cap).collect();
            r.values = json!({
                "yang_baxter": yb.passed(),
                "failing_degree": yb.failing_degree,
                "residual": yb.residual.to_string(),
                "h3": report.h3,
                "h1": report.h1,
                "antisymmetry": report.antisymmetry,
                "delta_squared_central": report.delta_squared,
                "sigma2_agrees": report.sigma2_agrees,
                "consistent": report.consistent(),
            });
            let head = match yb.failing_degree {
                None => format!("YB: pass (cap {cap})"),
                Some(d) => format!(
                    "YB: FAIL at degree {d} (cap {cap}); residual {}",
                    yb.residual.homogeneous(d)
                ),
            };
            r.text = format!("{head}\n{}", report.to_string().trim_end());
            vec![r]
        }
        Command::Distinguish { w1, w2 } => {
            let cap = cx.cap(3);
            let (a, b) = (WeldedWord::parse(&w1, n)?, WeldedWord::parse(&w2, n)?);
            let basis = cx.store.oriented(n, cap)?;
            let d = distinguish(&a, &b, &basis, cap)?;
            let mut r = Report::new("distinguish")
                .input("n", n)
                .input("cap", cap)
                .input("w1", a.to_string())
                .input("w2", b.to_string());
            r.degrees = (0..=cap).collect();
            r.values = json!({
                "first_difference": d.first_difference,
                "oracle_equal": d.oracle_equal,
                "consistent": d.consistent(),
            });
            r.text = d.to_string();
            vec![r]
        }
        Command::VassilievDegree { element } => {
            let cap = cx.cap(3);
            let xi = GroupRingElement::parse(&element, n)?;
            let basis = cx.store.oriented(n, cap)?;
            let f = vassiliev_degree(&xi, &basis, cap)?;
            let mut r = Report::new("vassiliev-degree")
                .input("n", n)
                .input("cap", cap)
                .input("element", xi.to_string());
            r.degrees = f.order.into_iter().collect();
            r.values = json!({
                "order": f.order,
                "image": f.image.to_string(),
                "leading_term": f.leading_term().map(|t| t.to_string()),
            });
            r.text = f.to_string();
            vec![r]
        }
        Command::DeltaKernel { degree, limit } => {
            let degrees: Vec<usize> = match degree {
                Some(k) => vec![k],
                None => (1..=cx.cap(3)).collect(),
            };
            let mut r = Report::new("delta-kernel").input("n", n).input("limit", limit);
            let mut values = Map::new();
            let mut lines = Vec::new();
            for &k in &degrees {
                let d = delta_kernel_with_limit(n, k, limit, &cx.store)?;
                values.insert(
                    k.to_string(),
                    json!({
                        "source_dim": d.source_dim,
                        "kernel_dim": d.dimension(),
                        "kernel": strings(&d.kernel),
                    }),
                );
                lines.push(format!(
                    "degree {k}: source dimension {}, kernel dimension {}",
                    d.source_dim,
                    d.dimension()
                ));
                lines.extend(d.kernel.iter().map(|x| format!("  {x}")));
            }
            r.degrees = degrees;
            r.values = Value::Object(values);
            r.text = lines.join("\n");
            vec![r]
        }
        Command::HilbertTable => {
            let cap = cx.cap(4);
            let presets = match &cx.g.preset {
                Some(_) => vec![cx.preset("artin")?],
                None => vec![RelationPreset::InfinitesimalArtin(n), RelationPreset::OrientedArtin(n)],
            };
            let mut rows = Vec::new();
            let mut lines = vec![format!("{:<28} {}", "degree", strings(0..=cap).join(" "))];
            for p in presets {
                let row = hilbert_row(p, cap, &cx.store)?;
                lines.push(format!(
                    "{:<28} {}",
                    row.preset.to_string(),
                    strings(&row.dims).join(" ")
                ));
                if let Some(w) = &row.with_permutations {
                    lines.push(format!("{:<28} {}", format!("  x S{n}"), strings(w).join(" ")));
                }
                rows.push(json!({
                    "preset": row.preset.to_string(),
                    "dims": row.dims,
                    "with_permutations": row.with_permutations,
                }));
            }
            let mut r = Report::new("hilbert-table").input("n", n).input("cap", cap);
            r.degrees = (0..=cap).collect();
            r.values = json!({ "rows": rows });
            r.text = lines.join("\n");
            vec![r]
        }
        Command::CheckSplitting { samples, seed } => {
            let cap = cx.cap(3);
            let s = check_splitting_identity(n, cap, samples, seed, &cx.store)?;
            let mut r = Report::new("check-splitting")
                .input("n", n)
                .input("cap", cap)
                .input("samples", samples)
                .input("seed", seed);
            r.passed = s.passed();
            r.degrees = (0..=cap).collect();
            r.values = json!({ "passed": s.passed(), "failures": s.failures });
            r.text = s.to_string();
            vec![r]
        }
    };
    Ok(reports)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let store = match &cli.global.cache_dir {
        Some(dir) => BasisStore::with_cache_dir(dir),
        None => BasisStore::new(),
    };
    let cx = Session { g: cli.global, store };
    match run(&cx, cli.command) {
        Ok(reports) => {
            let mut passed = true;
            for r in &reports {
                match cx.g.format {
                    Format::Text => println!("{}", r.text),
                    Format::Structured => println!("{}", r.structured()),
                }
                passed &= r.passed;
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
