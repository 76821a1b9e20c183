//! Verification of the order-6 quandle whose compatible topology is neither
//! coarse nor discrete on an orbit.

use std::fmt;

use super::{compatibility_witness, translation_failure};
use crate::catalog;
use crate::quandle::QuandleTable;
use crate::set::ElemSet;
use crate::topology::Preorder;

/// Published values of `R_x(y ⊲ z)` for `x, z ∈ {a, b}` and `y ∈ {c, d, e, f}`,
/// as `(x, y, z, value)`. Each must also equal `R_x(y) ⊲ R_x(z)`.
const DISTRIBUTIVITY_VALUES: [(usize, usize, usize, usize); 16] = [
    (0, 2, 0, 2),
    (0, 3, 0, 3),
    (0, 4, 0, 4),
    (0, 5, 0, 5),
    (0, 2, 1, 5),
    (0, 3, 1, 4),
    (0, 4, 1, 3),
    (0, 5, 1, 2),
    (1, 2, 0, 5),
    (1, 3, 0, 4),
    (1, 4, 0, 3),
    (1, 5, 0, 2),
    (1, 2, 1, 2),
    (1, 3, 1, 3),
    (1, 4, 1, 4),
    (1, 5, 1, 5),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub checks: Vec<CheckResult>,
}

impl CounterexampleReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

impl fmt::Display for CounterexampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {}: {}", c.name, c.detail)?;
        }
        write!(f, "{}/{} checks passed", self.passed_count(), self.checks.len())
    }
}

fn check(name: &'static str, result: Result<String, String>) -> CheckResult {
    match result {
        Ok(detail) => CheckResult {
            name,
            passed: true,
            detail,
        },
        Err(detail) => CheckResult {
            name,
            passed: false,
            detail,
        },
    }
}

/// Runs the checks on the built-in table and topology.
pub fn verify_counterexample() -> CounterexampleReport {
    let rows = catalog::counterexample6().rows();
    verify_counterexample_with(&rows, &catalog::counterexample_topology())
}

/// Runs the checks on a raw 6×6 table and a topology, so that mutated inputs can be tested.
///
/// Checks: the table is a quandle and reproduces the published translation
/// identities; its orbits are `{a}`, `{b}`, `{c,d,e,f}`; the topology is
/// compatible; its restriction to `{c,d,e,f}` is not coarse; and not discrete.
pub fn verify_counterexample_with(rows: &[Vec<usize>], topology: &Preorder) -> CounterexampleReport {
    let big_orbit: ElemSet = [2, 3, 4, 5].into_iter().collect();
    let quandle = QuandleTable::new(rows);

    let validity = check(
        "quandle-axioms",
        match &quandle {
            Err(e) => Err(format!("table is not a quandle: {e}")),
            Ok(q) => translation_identities(q),
        },
    );

    let Ok(q) = quandle else {
        let skipped = |name| CheckResult {
            name,
            passed: false,
            detail: "skipped: table is not a quandle".into(),
        };
        return CounterexampleReport {
            checks: vec![
                validity,
                skipped("orbits"),
                skipped("topology-compatible"),
                skipped("restriction-not-coarse"),
                skipped("restriction-not-discrete"),
            ],
        };
    };

    let orbits = q.orbit_decomposition();
    let expected: Vec<ElemSet> = vec![ElemSet::singleton(0), ElemSet::singleton(1), big_orbit];
    let orbit_check = check(
        "orbits",
        if orbits.blocks() == expected.as_slice() {
            Ok(format!("orbits are {orbits}"))
        } else {
            Err(format!("orbits are {orbits}, expected {{a}} {{b}} {{c,d,e,f}}"))
        },
    );

    let compat_check = check(
        "topology-compatible",
        match (compatibility_witness(&q, topology), translation_failure(&q, topology)) {
            (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
            (Ok(None), Ok(None)) => Ok("⊲ is monotone; every R_x is a homeomorphism and every L_x continuous".into()),
            (Ok(Some(w)), Ok(t)) => Err(format!(
                "{w}{}",
                t.map(|t| format!("; {t}")).unwrap_or_default()
            )),
            (Ok(None), Ok(Some(t))) => Err(format!("criteria disagree: {t}")),
        },
    );

    let restricted = topology.restrict(big_orbit);
    let classes = |p: &Preorder| {
        p.equivalence_classes()
            .iter()
            .map(|c| {
                c.iter()
                    .map(|i| crate::format::letter(i + 2).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .map(|s| format!("{{{s}}}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let not_coarse = check(
        "restriction-not-coarse",
        match &restricted {
            Err(e) => Err(e.to_string()),
            Ok(r) if r.is_coarse() => Err("restriction to {c,d,e,f} is coarse".into()),
            Ok(r) => Ok(format!("restriction classes {}", classes(r))),
        },
    );
    let not_discrete = check(
        "restriction-not-discrete",
        match &restricted {
            Err(e) => Err(e.to_string()),
            Ok(r) if r.is_discrete() => Err("restriction to {c,d,e,f} is discrete".into()),
            Ok(r) => Ok(format!("restriction classes {}", classes(r))),
        },
    );

    CounterexampleReport {
        checks: vec![validity, orbit_check, compat_check, not_coarse, not_discrete],
    }
}

fn translation_identities(q: &QuandleTable) -> Result<String, String> {
    if q.order() != 6 {
        return Err(format!("expected order 6, found {}", q.order()));
    }
    let l = crate::format::letter;
    for x in 2..6 {
        let r = q.right_translation(x).map_err(|e| e.to_string())?;
        if !r.is_identity() {
            return Err(format!("R_{} is {r}, expected the identity", l(x)));
        }
    }
    for &(x, y, z, value) in &DISTRIBUTIVITY_VALUES {
        let lhs = q.op(q.op(y, z), x);
        let rhs = q.op(q.op(y, x), q.op(z, x));
        if lhs != value || rhs != value {
            return Err(format!(
                "R_{x}({y}⊲{z}) = {lhs}, R_{x}({y})⊲R_{x}({z}) = {rhs}, expected {v}",
                x = l(x),
                y = l(y),
                z = l(z),
                lhs = l(lhs),
                rhs = l(rhs),
                v = l(value)
            ));
        }
    }
    Ok(format!(
        "axioms hold; R_c = R_d = R_e = R_f = id; {} translation identities reproduced",
        DISTRIBUTIVITY_VALUES.len()
    ))
}
