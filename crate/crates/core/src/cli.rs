//! Command-line front end. [`run`] takes argv and returns the exit code
//! together with everything that should be printed to stdout.
//!
//! JSON documents carry a `version` field. Integers are JSON numbers;
//! non-integral rationals are strings such as `"-3/2"`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::chern::{chern_tangent_ci, hrr_chi, series_trace, twist_chern, ChernSeries, IntersectionModel};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, rat, BinaryForm, MultiPoly, Rational};
use crate::fanotab::{classify_row, embedding_target_dim, fano_table, genus_of, row};
use crate::liecontact::{build, contact_check, highest_root_vector};
use crate::mu::{
    divisor_type, foliation_verdict, format_biform, format_form, icosahedral_form, nu_equivariance_check,
    orbit_tangent_rank, pullback_field_check, sl2_bracket, wedge_section, DivisorType, OrbitPoint, Sl2Element,
};
use crate::schubert::{
    apply_word, braid_order, braid_relation_holds, build_root_system, integrate_gb_with_word, top_chern_gp_trace,
    RootType,
};
use crate::wps::{bott_dimension, dolgachev_vanishing, WeightedPS};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "fano", version, about = "Exact computations around Fano threefolds with twisted one-forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The table of Fano threefolds of Picard number one.
    Table {
        #[arg(long)]
        json: bool,
    },
    /// Decide h^0(V, Omega^1(1)) for one table row.
    CheckRow {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=18))]
        n: u32,
        /// Include the rule-by-rule trace.
        #[arg(long)]
        trace: bool,
    },
    /// Degree of the top Chern class of a five-dimensional model.
    C5 {
        #[arg(value_enum)]
        model: C5Model,
    },
    /// Riemann-Roch on a K3 surface with a polarisation L.
    HrrK3 {
        #[arg(long, default_value_t = 22)]
        l_squared: i64,
        #[arg(long, value_enum, default_value_t = K3Bundle::Omega1Twist)]
        bundle: K3Bundle,
    },
    /// Dolgachev vanishing for Omega^l(k) on a weighted projective space.
    WpsVanish {
        /// Comma-separated weights, e.g. 1,1,1,2,3.
        #[arg(long)]
        weights: String,
        #[arg(long)]
        forms: usize,
        #[arg(long, allow_hyphen_values = true)]
        twist: i64,
    },
    /// h^0(P^n, Omega^p(k)) by Bott's formula.
    Bott {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// The sl2 action on binary forms and the Mukai-Umemura model.
    Mu {
        #[command(subcommand)]
        command: MuCommand,
    },
    /// Lie-algebraic checks on g2.
    G2 {
        #[command(subcommand)]
        command: G2Command,
    },
    /// Divided-difference Schubert calculus on G/B.
    Schubert {
        #[command(subcommand)]
        command: SchubertCommand,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum C5Model {
    G2p1,
    G2p2,
    Quadric5,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum K3Bundle {
    /// Omega^1 tensor L.
    Omega1Twist,
    /// L itself.
    Line,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrbitChoice {
    /// The icosahedral form x, affine point [x : 1].
    Icosahedral,
    /// [t1^12 : 0].
    O1,
    /// [t0 t1^11 : 0].
    O2,
}

#[derive(Args, Debug)]
struct Pair {
    /// sl2 element, e.g. "e", "e + 2 f", "h".
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
}

#[derive(Subcommand, Debug)]
enum MuCommand {
    /// The section v_X wedge v_Y of O(2,2) on P^1 x P^1 and its divisor.
    Wedge(Pair),
    /// Dimension of the sl2 orbit through a point.
    Orbit {
        #[arg(long, value_enum)]
        point: OrbitChoice,
    },
    /// Whether the plane field spanned by X, Y is a foliation.
    Foliation(Pair),
    /// Equivariance of the normalisation map and of its derivative.
    Equivariance {
        /// Matrix entries a,b,c,d with ad - bc = 1.
        #[arg(long, default_value = "1,1,0,1", allow_hyphen_values = true)]
        gamma: String,
    },
}

#[derive(Subcommand, Debug)]
enum G2Command {
    /// Contact structure checks at a root vector (default: highest root).
    ContactCheck {
        /// Root in simple-root coordinates, e.g. 3,2.
        #[arg(long, allow_hyphen_values = true)]
        root: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum SchubertCommand {
    /// Degree of a class on G/B via the longest divided difference.
    Integrate {
        #[arg(long, default_value = "G2")]
        system: String,
        /// Polynomial in x1, x2, ... of degree dim G/B.
        #[arg(long)]
        class: String,
        /// Reduced word for w0, e.g. 1,2,1,2,1,2.
        #[arg(long)]
        word: Option<String>,
    },
    /// Braid relations of the divided differences on probe classes.
    BraidCheck {
        #[arg(long, default_value = "G2")]
        system: String,
    },
}

/// Parses argv (including the program name) and runs one command.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(Output::Json(v)) => (0, render(v)),
        Ok(Output::Text(s)) => (0, s),
        Err(e) => (
            1,
            render(json!({"error": {"category": e.category().as_str(), "message": e.to_string()}})),
        ),
    }
}

enum Output {
    Json(Value),
    Text(String),
}

fn render(mut v: Value) -> String {
    if let Value::Object(m) = &mut v {
        m.insert("version".into(), json!(VERSION));
    }
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

/// Integral values become numbers when they fit in 64 bits.
fn num(r: &Rational) -> Value {
    if r.is_integer() {
        if let Some(n) = r.numer().to_i64() {
            return json!(n);
        }
    }
    json!(format_rational(r))
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| Error::Parse(format!("bad {what} entry {t:?}"))))
        .collect()
}

fn dispatch(cmd: Command) -> Result<Output> {
    Ok(match cmd {
        Command::Table { json } => table(json)?,
        Command::CheckRow { n, trace } => {
            let rep = classify_row(&row(n)?)?;
            let mut v = serde_json::to_value(&rep).expect("serializable");
            if !trace {
                v.as_object_mut().expect("object").remove("trace");
            }
            Output::Json(v)
        }
        Command::C5 { model } => Output::Json(c5(model)?),
        Command::HrrK3 { l_squared, bundle } => Output::Json(hrr_k3(l_squared, bundle)?),
        Command::WpsVanish { weights, forms, twist } => {
            let q = WeightedPS::parse(&weights)?;
            let v = dolgachev_vanishing(&q, forms, twist)?;
            let mut out = serde_json::to_value(&v).expect("serializable");
            let m = out.as_object_mut().expect("object");
            m.insert("space".into(), json!(q.to_string()));
            m.insert("well_formed".into(), json!(q.is_well_formed()));
            Output::Json(out)
        }
        Command::Bott { n, p, k } => Output::Json(json!({"n": n, "p": p, "k": k, "h0": bott_dimension(n, p, k)?})),
        Command::Mu { command } => Output::Json(mu(command)?),
        Command::G2 {
            command: G2Command::ContactCheck { root },
        } => Output::Json(g2_contact(root)?),
        Command::Schubert { command } => Output::Json(schubert(command)?),
    })
}

fn table(as_json: bool) -> Result<Output> {
    let rows = fano_table();
    if as_json {
        let mut out = Vec::new();
        for r in &rows {
            let mut v = serde_json::to_value(r).expect("serializable");
            let m = v.as_object_mut().expect("object");
            m.insert("genus_check".into(), json!(genus_of(r.r, r.d)? == r.g));
            m.insert("embedding_dim".into(), json!(embedding_target_dim(r.g)?));
            out.push(v);
        }
        return Ok(Output::Json(json!({ "rows": out })));
    }
    let mut s = format!("{:>3} {:>2} {:>3} {:>3} {:>5}  {}\n", "no", "r", "d", "g", "P^N", "variety");
    for r in &rows {
        s.push_str(&format!(
            "{:>3} {:>2} {:>3} {:>3} {:>5}  {}\n",
            r.no,
            r.r,
            r.d,
            r.g,
            embedding_target_dim(r.g)?,
            r.label
        ));
    }
    Ok(Output::Text(s))
}

fn c5(model: C5Model) -> Result<Value> {
    let parabolic = match model {
        C5Model::G2p1 => 1,
        C5Model::G2p2 => 2,
        C5Model::Quadric5 => {
            let (m, t) = chern_tangent_ci(6, &[2])?;
            let top = t.c(5);
            return Ok(json!({
                "model": m.name(),
                "bundle": "T",
                "top_chern": m.format_class(&top),
                "trace": series_trace(&m, &t),
                "value": num(&m.integrate(&top)?),
            }));
        }
    };
    let rs = build_root_system(RootType::G2);
    let t = top_chern_gp_trace(&rs, parabolic)?;
    let mut v = serde_json::to_value(&t).expect("serializable");
    v.as_object_mut()
        .expect("object")
        .insert("model".into(), json!(format!("G2/P{parabolic}")));
    Ok(v)
}

fn hrr_k3(l_squared: i64, which: K3Bundle) -> Result<Value> {
    let s = IntersectionModel::k3(l_squared)?;
    let l = s.generator(0);
    let tangent = s.tangent().expect("K3 carries its tangent series").clone();
    let (name, bundle) = match which {
        K3Bundle::Omega1Twist => ("Omega^1(L)", twist_chern(&tangent.dual(), &l)?),
        K3Bundle::Line => ("L", ChernSeries::line_bundle(&s, &l)?),
    };
    Ok(json!({
        "model": s.name(),
        "bundle": name,
        "rank": bundle.rank(),
        "chi": num(&hrr_chi(&s, &bundle)?),
        "trace": {
            "tangent": series_trace(&s, &tangent),
            "bundle": series_trace(&s, &bundle),
        },
    }))
}

fn parse_pair(p: &Pair) -> Result<(Sl2Element, Sl2Element)> {
    Ok((Sl2Element::parse(&p.x)?, Sl2Element::parse(&p.y)?))
}

fn mu(cmd: MuCommand) -> Result<Value> {
    Ok(match cmd {
        MuCommand::Wedge(p) => {
            let (x, y) = parse_pair(&p)?;
            let s = wedge_section(&x, &y);
            let (kind, residual) = match divisor_type(&s)? {
                DivisorType::TwoDelta => ("2 Delta", None),
                DivisorType::DeltaPlusPrime(r) => ("Delta + Delta'", Some(format_biform(&r))),
            };
            json!({
                "x": x.to_string(),
                "y": y.to_string(),
                "field_x": format_form(&x.field()),
                "field_y": format_form(&y.field()),
                "wedge": format_biform(&s),
                "divisor_type": kind,
                "residual": residual,
            })
        }
        MuCommand::Orbit { point } => {
            let (name, pt) = match point {
                OrbitChoice::Icosahedral => ("icosahedral", OrbitPoint::Affine(icosahedral_form())),
                OrbitChoice::O1 => ("o1", OrbitPoint::AtInfinity(BinaryForm::monomial(12, 12, rat(1)))),
                OrbitChoice::O2 => ("o2", OrbitPoint::AtInfinity(BinaryForm::monomial(12, 11, rat(1)))),
            };
            let (form, affine) = match &pt {
                OrbitPoint::Affine(v) => (format_form(v), true),
                OrbitPoint::AtInfinity(v) => (format_form(v), false),
            };
            json!({
                "point": name,
                "form": form,
                "affine": affine,
                "orbit_dim": orbit_tangent_rank(&pt)?,
            })
        }
        MuCommand::Foliation(p) => {
            let (x, y) = parse_pair(&p)?;
            json!({
                "x": x.to_string(),
                "y": y.to_string(),
                "bracket": sl2_bracket(&x, &y).to_string(),
                "verdict": foliation_verdict(&x, &y)?,
            })
        }
        MuCommand::Equivariance { gamma } => {
            let g: Vec<Rational> = gamma.split(',').map(|t| parse_rational(t.trim())).collect::<Result<_>>()?;
            if g.len() != 4 {
                return Err(Error::Parse(format!("gamma needs four entries, got {}", g.len())));
            }
            let m = [[g[0].clone(), g[1].clone()], [g[2].clone(), g[3].clone()]];
            let mut pullback = serde_json::Map::new();
            for (name, x) in [("e", Sl2Element::e()), ("f", Sl2Element::f()), ("h", Sl2Element::h())] {
                pullback.insert(name.into(), serde_json::to_value(pullback_field_check(&x)?).expect("serializable"));
            }
            json!({
                "gamma": g.iter().map(format_rational).collect::<Vec<_>>(),
                "nu_equivariant": nu_equivariance_check(&m)?,
                "pullback": pullback,
            })
        }
    })
}

fn g2_contact(root: Option<String>) -> Result<Value> {
    let l = build(RootType::G2)?;
    let z = match root {
        None => highest_root_vector(&l),
        Some(r) => {
            let r: Vec<i64> = parse_list(&r, "root")?;
            l.root_vector(&r)
                .ok_or_else(|| Error::precondition(format!("{r:?} is not a root of G2")))?
        }
    };
    let res = contact_check(&l, &z)?;
    let mut v = serde_json::to_value(&res).expect("serializable");
    v.as_object_mut().expect("object").insert("z".into(), json!(l.label_of(&z)));
    Ok(v)
}

fn schubert(cmd: SchubertCommand) -> Result<Value> {
    Ok(match cmd {
        SchubertCommand::Integrate { system, class, word } => {
            let rs = build_root_system(system.parse()?);
            let f = MultiPoly::parse(&class, rs.rank())?;
            let reduced = rs.weyl_group().reduced_words_w0();
            let word = match word {
                None => rs.weyl_group().longest_word(),
                Some(w) => {
                    let w: Vec<usize> = parse_list(&w, "word")?;
                    if !reduced.contains(&w) {
                        return Err(Error::precondition(format!("{w:?} is not a reduced word for w0")));
                    }
                    w
                }
            };
            let value = integrate_gb_with_word(&rs, &f, &word)?;
            let steps = apply_word(&rs, &word, &f)?;
            json!({
                "system": rs.kind().to_string(),
                "class": f.to_string(),
                "reduced_word": word,
                "intermediates": steps.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "value": num(&value),
            })
        }
        SchubertCommand::BraidCheck { system } => {
            let rs = build_root_system(system.parse()?);
            let r = rs.rank();
            // every monomial of degree <= 4
            let mut probes = vec![MultiPoly::one(r)];
            let mut frontier = probes.clone();
            for _ in 0..4 {
                frontier = frontier
                    .iter()
                    .flat_map(|p| (0..r).map(move |i| p * &MultiPoly::var(r, i)))
                    .collect();
                frontier.sort_by_key(ToString::to_string);
                frontier.dedup();
                probes.extend(frontier.iter().cloned());
            }
            let mut relations = Vec::new();
            let mut all = true;
            for i in 1..=r {
                for j in i + 1..=r {
                    let holds = probes
                        .iter()
                        .map(|f| braid_relation_holds(&rs, i, j, f))
                        .collect::<Result<Vec<_>>>()?
                        .into_iter()
                        .all(|b| b);
                    all &= holds;
                    relations.push(json!({"i": i, "j": j, "m": braid_order(&rs, i, j), "holds": holds}));
                }
            }
            json!({
                "system": rs.kind().to_string(),
                "probes": probes.len(),
                "relations": relations,
                "all_hold": all,
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_json(args: &[&str]) -> (i32, Value) {
        let (code, out) = run(std::iter::once("fano").chain(args.iter().copied()));
        (code, serde_json::from_str(&out).unwrap_or(Value::Null))
    }

    #[test]
    fn c5_values() {
        for m in ["g2p1", "g2p2", "quadric5"] {
            let (code, v) = run_json(&["c5", m]);
            assert_eq!(code, 0);
            assert_eq!(v["value"], json!(6));
        }
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["fano", "c5", "g2p3"]).0, 2);
        assert_eq!(run(["fano", "table", "--bogus"]).0, 2);
        assert_eq!(run(["fano", "check-row", "19"]).0, 2);
        assert_eq!(run(["fano"]).0, 2);
    }

    #[test]
    fn help_exits_0() {
        for sub in ["table", "check-row", "c5", "hrr-k3", "wps-vanish", "bott", "mu", "g2", "schubert"] {
            let (code, out) = run(["fano", sub, "--help"]);
            assert_eq!(code, 0, "{sub}");
            assert!(out.contains("Usage"));
        }
    }

    #[test]
    fn computation_errors_exit_1() {
        let (code, v) = run_json(&["bott", "--n", "3", "--p", "5", "--k", "1"]);
        assert_eq!(code, 1);
        assert_eq!(v["error"]["category"], "precondition");
        let (code, v) = run_json(&["mu", "equivariance", "--gamma", "1,1,1,1"]);
        assert_eq!(code, 1);
        assert_eq!(v["error"]["category"], "precondition");
        let (code, _) = run_json(&["schubert", "integrate", "--class", "x1^6", "--word", "1,1,2,2,1,2"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn other_commands() {
        assert_eq!(run_json(&["hrr-k3"]).1["chi"], json!(2));
        assert_eq!(run_json(&["hrr-k3", "--bundle", "line"]).1["chi"], json!(13));
        assert_eq!(run_json(&["bott", "--n", "3", "--p", "1", "--k", "2"]).1["h0"], json!(6));
        assert_eq!(run_json(&["check-row", "17"]).1["h0"], "1");
        assert!(run_json(&["check-row", "3", "--trace"]).1["trace"].is_array());
        assert_eq!(run_json(&["mu", "orbit", "--point", "o2"]).1["orbit_dim"], json!(2));
        assert_eq!(run_json(&["mu", "wedge", "--x", "e", "--y", "f"]).1["divisor_type"], "Delta + Delta'");
        assert_eq!(run_json(&["mu", "foliation", "--x", "h", "--y", "e"]).1["verdict"], "FoliationEverywhere");
        assert_eq!(run_json(&["mu", "equivariance"]).1["nu_equivariant"], json!(true));
        assert_eq!(run_json(&["g2", "contact-check"]).1["dim_centralizer"], json!(9));
        assert_eq!(run_json(&["schubert", "integrate", "--class", "x1 x2^5"]).1["value"], json!(18));
        assert_eq!(run_json(&["schubert", "braid-check", "--system", "B2"]).1["all_hold"], json!(true));
        let (code, out) = run(["fano", "table"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 19);
    }
}
