//! Text and JSON renderings of command results.

use serde_json::{json, Value};
use wonderful_core::rigidity::Distinction;
use wonderful_core::sphsys::sigma_name;
use wonderful_core::{CriticalityReport, OrbitPoset, RigidityReport, ValidationReport};

pub fn violations_text(r: &ValidationReport) -> String {
    r.violations
        .iter()
        .map(|v| format!("{}: {}\n", v.axiom, v.witness))
        .collect()
}

pub fn violations_json(r: &ValidationReport) -> Value {
    let list: Vec<Value> = r
        .violations
        .iter()
        .map(|v| json!({ "axiom": v.axiom.to_string(), "witness": v.witness }))
        .collect();
    json!({ "valid": r.ok(), "violations": list })
}

pub fn rigidity_text(r: &RigidityReport) -> String {
    if r.rigid() {
        return "rigid: true\n".into();
    }
    let names: Vec<String> = r
        .distinguished
        .iter()
        .map(|d| format!("{} (condition {})", sigma_name(d.index), d.why.condition()))
        .collect();
    format!("rigid: false, distinguished: {}\n", names.join(", "))
}

fn witness(why: &Distinction) -> Value {
    match why {
        Distinction::EqualColors { colors } => json!({ "colors": [colors.0, colors.1] }),
        Distinction::BChain { sigma } | Distinction::G2 { sigma } => {
            let chain: Vec<String> = sigma.iter().map(ToString::to_string).collect();
            json!({ "diagram": chain })
        }
    }
}

pub fn rigidity_json(r: &RigidityReport) -> Value {
    let list: Vec<Value> = r
        .distinguished
        .iter()
        .map(|d| {
            json!({
                "root": sigma_name(d.index),
                "value": d.root.to_string(),
                "condition": d.why.condition(),
                "witness": witness(&d.why),
            })
        })
        .collect();
    json!({ "rigid": r.rigid(), "distinguished": list })
}

fn labels_text<'a>(it: impl IntoIterator<Item = &'a wonderful_core::Label>) -> String {
    let names: Vec<String> = it.into_iter().map(ToString::to_string).collect();
    format!("{{{}}}", names.join(","))
}

pub fn critical_text(r: &CriticalityReport) -> String {
    r.roots
        .iter()
        .map(|c| {
            let verdict = if c.distinguished {
                "distinguished".to_string()
            } else if c.critical && c.vacuous {
                "critical (no proper localization)".to_string()
            } else if c.critical {
                "critical".to_string()
            } else {
                match &c.failing_subset {
                    Some(sub) => format!("not critical, fails at {}", labels_text(sub)),
                    None => "not critical".to_string(),
                }
            };
            format!("{} = {}: {verdict}\n", sigma_name(c.index), c.root)
        })
        .collect()
}

pub fn critical_json(r: &CriticalityReport) -> Value {
    let list: Vec<Value> = r
        .roots
        .iter()
        .map(|c| {
            json!({
                "root": sigma_name(c.index),
                "value": c.root.to_string(),
                "distinguished": c.distinguished,
                "critical": c.critical,
                "vacuous": c.vacuous,
                "failing_subset": c.failing_subset.as_ref().map(|s| {
                    s.iter().map(ToString::to_string).collect::<Vec<_>>()
                }),
            })
        })
        .collect();
    json!({ "roots": list })
}

pub fn orbits_text(p: &OrbitPoset) -> String {
    let mut out = format!(
        "orbits: {}, covering pairs: {}\n",
        p.nodes.len(),
        p.edges.len()
    );
    for (i, name) in p.root_names.iter().enumerate() {
        out += &format!("{} = {name}\n", sigma_name(i));
    }
    for n in &p.nodes {
        out += &format!("{} boundary_rank={}\n", p.node_label(n), n.boundary_rank);
    }
    for &(s, t) in &p.edges {
        out += &format!(
            "{} -> {}\n",
            p.node_label(&p.nodes[s]),
            p.node_label(&p.nodes[t])
        );
    }
    out
}

pub fn orbits_json(p: &OrbitPoset) -> Value {
    let roots: Vec<Value> = p
        .root_names
        .iter()
        .enumerate()
        .map(|(i, v)| json!({ "root": sigma_name(i), "value": v }))
        .collect();
    let nodes: Vec<Value> = p
        .nodes
        .iter()
        .map(|n| {
            let members: Vec<String> = n.roots.iter().map(|&i| sigma_name(i)).collect();
            json!({ "roots": members, "boundary_rank": n.boundary_rank })
        })
        .collect();
    let edges: Vec<Value> = p
        .edges
        .iter()
        .map(|&(s, t)| json!([p.node_label(&p.nodes[s]), p.node_label(&p.nodes[t])]))
        .collect();
    json!({ "rank": p.rank, "spherical_roots": roots, "nodes": nodes, "edges": edges })
}
