use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use e8toe::chevalley::ChevalleyAlgebra;
use e8toe::decomp::{peel_sl2, peel_to_bitable, refine, refine_bitable, sl2_weights};
use e8toe::reality::frobenius_schur;
use e8toe::sl2::{classify_sl2_of_index, classify_sl2_upto_index};
use e8toe::toe::{centralizer_of, dimension_no_go, theorem_report, Mode};
use e8toe::{Error, IrrepLabel, LatticeVector, ProductType, RootSystem, SimpleType};

#[derive(Parser)]
#[command(name = "e8toe", version, about = "Exact sl2 and representation computations inside E8")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized sl2 triple search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Root system summary.
    Roots {
        #[arg(value_name = "TYPE")]
        ty: SimpleType,
        /// Also list the positive roots.
        #[arg(long)]
        list: bool,
    },
    /// sl2 subalgebras up to conjugacy, by Dynkin index.
    Sl2 {
        #[arg(value_name = "TYPE")]
        ty: SimpleType,
        #[arg(long, conflicts_with = "exact_index", required_unless_present = "exact_index")]
        max_index: Option<u64>,
        #[arg(long)]
        exact_index: Option<u64>,
    },
    /// Isotypic decomposition of E8 under one or two commuting sl2.
    Decompose {
        #[command(flatten)]
        hs: Heights,
        /// Also decompose each piece under the centralizer.
        #[arg(long)]
        refine: bool,
    },
    /// Centralizer of one or two commuting sl2 in E8.
    Centralizer {
        #[command(flatten)]
        hs: Heights,
    },
    /// Reality type of an irreducible representation.
    Reality {
        #[arg(value_name = "TYPE")]
        ty: ProductType,
        /// Highest weight in fundamental-weight coordinates, comma separated.
        #[arg(value_delimiter = ',', allow_hyphen_values = true, num_args = 1..)]
        weight: Vec<i64>,
    },
    /// Dimension count for the fermions of several generations.
    NogoDim {
        #[arg(long, default_value_t = 3)]
        generations: u64,
    },
    /// Evaluate every candidate embedding.
    Toe {
        #[arg(long, value_enum, default_value_t = ModeArg::Toe2)]
        mode: ModeArg,
    },
}

#[derive(clap::Args)]
struct Heights {
    /// Defining vector in simple-coroot coordinates, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    h1: Vec<i64>,
    /// Defining vector of a second, commuting sl2.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    h2: Option<Vec<i64>>,
}

impl Heights {
    fn vectors(&self) -> Result<Vec<LatticeVector>, Error> {
        let mut v = vec![self.h1.clone()];
        v.extend(self.h2.clone());
        v.into_iter()
            .map(|h| {
                if h.len() != 8 {
                    return Err(Error::RankMismatch { expected: 8, found: h.len() });
                }
                Ok(LatticeVector(h))
            })
            .collect()
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Toe2,
    Toe2prime,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Toe2 => Mode::Toe2,
            ModeArg::Toe2prime => Mode::Toe2Prime,
        }
    }
}

/// Text and JSON renderings of a result, and whether it is a clean pass.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let seed = cli.seed;
    let out = match &cli.command {
        Command::Roots { ty, list } => {
            let rs = RootSystem::get(*ty);
            let mut text = format!(
                "{} roots, {} positive, h∨={}\n",
                rs.num_roots(),
                rs.positive_roots().len(),
                rs.dual_coxeter()
            );
            if *list {
                text.push_str(&rs.render_roots());
            }
            let json = json!({
                "type": ty.to_string(),
                "roots": rs.num_roots(),
                "positive": rs.positive_roots().len(),
                "dual_coxeter": rs.dual_coxeter(),
                "positive_roots": rs.positive_roots().iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
            });
            Output { text, json, ok: true }
        }
        Command::Sl2 { ty, max_index, exact_index } => {
            let found: Vec<(String, String, Vec<u8>)> = match (max_index, exact_index) {
                (_, Some(i)) => classify_sl2_of_index(*ty, *i, seed)?
                    .into_iter()
                    .map(|d| (i.to_string(), d.render(), d.labels))
                    .collect(),
                (Some(m), None) => classify_sl2_upto_index(*ty, *m, seed)?
                    .into_iter()
                    .map(|(d, i)| (i.to_string(), d.render(), d.labels))
                    .collect(),
                (None, None) => return Err(Error::InvalidArgument("give --max-index or --exact-index".into())),
            };
            let mut text = format!("{} sl2 subalgebras\n", found.len());
            for (i, r, _) in &found {
                text.push_str(&format!("\nindex {i}\n{r}\n"));
            }
            let json = json!({
                "type": ty.to_string(),
                "classes": found.iter().map(|(i, _, l)| json!({"index": i, "labels": l})).collect::<Vec<_>>(),
            });
            Output { text, json, ok: true }
        }
        Command::Decompose { hs, refine: fine } => decompose(&hs.vectors()?, *fine, seed)?,
        Command::Centralizer { hs } => {
            let g = ChevalleyAlgebra::e8();
            let (dim, id) = centralizer_of(g, &hs.vectors()?, seed)?;
            let coroots: Vec<Vec<String>> = id
                .simple_coroots
                .iter()
                .map(|c| c.iter().map(|x| x.to_string()).collect())
                .collect();
            let mut text = format!("dim {dim}, type {}\nsimple coroots:\n", id.ty);
            for c in &coroots {
                text.push_str(&format!("  {}\n", c.join(" ")));
            }
            let json = json!({"dim": dim, "type": id.ty.to_string(), "simple_coroots": coroots});
            Output { text, json, ok: true }
        }
        Command::Reality { ty, weight } => {
            let l = IrrepLabel::new(ty.clone(), e8toe::WeightVector(weight.clone()))?;
            let r = frobenius_schur(&l);
            let text = format!("{} of {}: dimension {}, {}\n", l.name(), ty, l.dimension()?, r);
            let json = json!({
                "type": ty.to_string(),
                "weight": weight,
                "name": l.name(),
                "dimension": l.dimension()?,
                "dual": l.dual().weight.0,
                "reality": r,
            });
            Output { text, json, ok: true }
        }
        Command::NogoDim { generations } => {
            let d = dimension_no_go(*generations)?;
            Output {
                text: d.render(),
                json: serde_json::to_value(&d).expect("serializable"),
                ok: true,
            }
        }
        Command::Toe { mode } => {
            let r = theorem_report((*mode).into(), seed)?;
            let json = json!({
                "mode": r.mode,
                "holds": r.holds(),
                "candidates": r.candidates.iter().map(|c| json!({
                    "ambient": c.config.ambient,
                    "index_pair": c.config.index_pair,
                    "centralizer": c.config.centralizer_type.to_string(),
                    "gmax": c.config.gmax_name,
                    "V21": c.v21.to_string(),
                    "V32": c.v32.to_string(),
                    "V22_dim": c.v22_dim,
                    "toe2": c.toe2,
                    "toe2prime": c.toe2prime,
                    "toe3_fails": c.toe3_fails,
                })).collect::<Vec<_>>(),
            });
            Output {
                text: r.render(),
                ok: r.holds(),
                json,
            }
        }
    };
    Ok(out)
}

fn decompose(hs: &[LatticeVector], fine: bool, seed: u64) -> Result<Output, Error> {
    let g = ChevalleyAlgebra::e8();
    if fine {
        let (_, id) = centralizer_of(g, hs, seed)?;
        if hs.len() == 2 {
            let t = refine_bitable(g, &hs[0], &hs[1], &id)?;
            return Ok(Output {
                text: format!("centralizer {}\n{}", id.ty, t.render()),
                json: serde_json::to_value(&t).expect("serializable"),
                ok: true,
            });
        }
        let cells = refine(g, hs, &id)?;
        return Ok(single_table(cells.iter().map(|(k, r)| (k[0], r.to_string(), r.dimension())), &id.ty));
    }
    let w = sl2_weights(g, hs)?;
    if hs.len() == 2 {
        let t = peel_to_bitable(&w)?;
        return Ok(Output {
            text: t.render(),
            json: serde_json::to_value(&t).expect("serializable"),
            ok: true,
        });
    }
    let cells = peel_sl2(&w)?;
    Ok(single_table(
        cells.iter().map(|(k, &d)| (k[0], d.to_string(), Ok(d))),
        &ProductType(vec![]),
    ))
}

fn single_table<'a>(
    cells: impl Iterator<Item = (u32, String, Result<u64, Error>)> + 'a,
    z: &ProductType,
) -> Output {
    let mut rows = BTreeMap::new();
    let mut text = String::new();
    if !z.0.is_empty() {
        text.push_str(&format!("centralizer {z}\n"));
    }
    for (m, s, d) in cells {
        text.push_str(&format!("[{m}]: {s}\n"));
        rows.insert(m.to_string(), json!({"content": s, "dim": d.ok()}));
    }
    Output {
        text,
        json: json!({"cells": rows}),
        ok: true,
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Discrepancy(_)
        | Error::Unidentified(_)
        | Error::NotReductive(_)
        | Error::NoSl2Triple(_)
        | Error::NonCommuting
        | Error::Overflow(_)
        | Error::InconsistentMultiset(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable") + "\n",
            };
            // A closed pipe is not an error of the computation.
            let _ = std::io::stdout().write_all(body.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
