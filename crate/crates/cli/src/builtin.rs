//! Compiled-in examples.

use std::sync::Arc;

use leibniz_core::{Bimodule, LeibnizAlgebra, Scalar};

pub const NAMES: [&str; 6] = ["A-alg", "A-mod", "B", "N", "D", "one-dim"];

pub struct Builtin<K> {
    pub name: &'static str,
    pub algebra: Arc<LeibnizAlgebra<K>>,
    /// Default coefficients, when the example comes with a bimodule.
    pub module: Option<Bimodule<K>>,
    pub basis: Vec<String>,
    pub anchor: &'static str,
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn builtin<K: Scalar>(name: &str) -> Option<Builtin<K>> {
    let b = match name {
        // F e acting on K^3 by a Jordan block from the left
        "A-alg" | "A-mod" => {
            let m = Bimodule::<K>::example_a();
            Builtin {
                name: if name == "A-alg" { "A-alg" } else { "A-mod" },
                algebra: m.algebra_arc().clone(),
                module: (name == "A-mod").then_some(m),
                basis: names(&["e"]),
                anchor: "Example A",
            }
        }
        "B" => {
            let m = Bimodule::<K>::example_b();
            Builtin {
                name: "B",
                algebra: m.algebra_arc().clone(),
                module: Some(m),
                basis: names(&["E", "I"]),
                anchor: "Example B",
            }
        }
        "N" => Builtin {
            name: "N",
            algebra: Arc::new(LeibnizAlgebra::example_n()),
            module: None,
            basis: names(&["e", "f"]),
            anchor: "Example C",
        },
        "D" => Builtin {
            name: "D",
            algebra: Arc::new(LeibnizAlgebra::example_a()),
            module: None,
            basis: names(&["e", "h"]),
            anchor: "Example D",
        },
        "one-dim" => Builtin {
            name: "one-dim",
            algebra: Arc::new(LeibnizAlgebra::one_dim_lie()),
            module: None,
            basis: names(&["x"]),
            anchor: "Theorem 4.3",
        },
        _ => return None,
    };
    Some(b)
}

/// Every built-in (algebra, coefficients) pair used by `verify --all-builtin`.
pub fn instances<K: Scalar>() -> Vec<(String, Arc<LeibnizAlgebra<K>>, Bimodule<K>)> {
    let mut out = Vec::new();
    for name in ["A-mod", "B", "N", "D", "one-dim"] {
        let b = builtin::<K>(name).expect("known name");
        let a = b.algebra.clone();
        if let Some(m) = b.module {
            out.push((format!("{name} with its module"), a.clone(), m));
            if name == "A-mod" {
                continue;
            }
        }
        out.push((format!("{name} with trivial F"), a.clone(), Bimodule::trivial(a.clone(), 1)));
        out.push((format!("{name} with adjoint"), a.clone(), Bimodule::adjoint(a)));
    }
    out
}
