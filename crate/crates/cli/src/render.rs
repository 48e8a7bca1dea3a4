//! Plain-text renderings of the command outputs.

use std::fmt::Write;

use minuscule_core::{
    BottSamelsonData, BottSamelsonReport, ComponentSet, RootSystem, WeightClass,
};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list<T: ToString>(v: &[T]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", items.join(","))
}

fn matrix(out: &mut String, title: &str, rows: &[Vec<i64>]) {
    let _ = writeln!(out, "{title}:");
    for row in rows {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        let _ = writeln!(out, "  {}", cells.join(""));
    }
}

pub fn table(rs: &RootSystem, classes: &[WeightClass]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{rs}");
    let _ = writeln!(out, "{:<8} {:<10} {:<11}", "weight", "minuscule", "cominuscule");
    for c in classes {
        let _ = writeln!(
            out,
            "{:<8} {:<10} {:<11}",
            format!("w{}", c.weight),
            yes_no(c.minuscule),
            yes_no(c.cominuscule)
        );
    }
    out
}

pub fn bott_samelson(bs: &BottSamelsonData, r: &BottSamelsonReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}{} weight w{}", r.family, r.rank, r.weight);
    let _ = writeln!(out, "gamma: {}", list(&r.gamma));
    let _ = writeln!(out, "beta: {}", list(&r.beta));
    let alpha: Vec<String> = bs.alpha().iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "alpha: {}", alpha.join(", "));
    let _ = writeln!(out, "special root: a{}", r.special_root);
    let _ = writeln!(out, "contracted: {}", list(&r.contracted));
    let _ = writeln!(out, "picard rank of the open orbit: {}", bs.picard_rank_open_orbit());
    matrix(&mut out, "<alpha_i^v, alpha_j>", &r.pair_alpha);
    matrix(&mut out, "<beta_i^v, beta_j>", &r.pair_beta);
    matrix(&mut out, "tangent classes T_j (xi basis, one per row)", &r.tangent);
    matrix(&mut out, "hat curves (C basis, one per row)", &r.hat);
    out
}

pub fn components(bs: &BottSamelsonData, set: &ComponentSet) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} of length {}: degree {}, {} components",
        bs.gamma(),
        bs.n(),
        set.degree,
        set.count
    );
    for c in &set.classes {
        let _ = write!(out, "  b = {}  a = {}", list(&c.b), list(&c.a));
        if let Some(d) = c.dimension {
            let _ = write!(out, "  dimension {d}");
        }
        let _ = writeln!(out);
    }
    out
}
