//! Built-in examples shipped with the crate.

use crate::format::{
    parse_algebroid, parse_fiber, parse_lie_algebra, parse_representation, AlgebroidSpec,
};
use crate::liealg::{LieAlgebra, Representation};
use crate::symbol::FiberData;

macro_rules! data {
    ($file:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/", $file))
    };
}

/// `(name, json)` for every built-in Lie algebra.
pub const ALGEBRAS: &[(&str, &str)] = &[
    ("zero", data!("algebra_zero.json")),
    ("r1", data!("algebra_r1.json")),
    ("r2", data!("algebra_r2.json")),
    ("r3", data!("algebra_r3.json")),
    ("r4", data!("algebra_r4.json")),
    ("h3", data!("algebra_h3.json")),
    ("aff1", data!("algebra_aff1.json")),
    ("su2", data!("algebra_su2.json")),
    ("sl2", data!("algebra_sl2.json")),
    ("solv4", data!("algebra_solv4.json")),
];

/// `(name, algebra name, json)` for every built-in representation.
pub const REPRESENTATIONS: &[(&str, &str, &str)] = &[
    ("su2_adjoint", "su2", data!("rep_su2_adjoint.json")),
    ("sl2_adjoint", "sl2", data!("rep_sl2_adjoint.json")),
    ("h3_adjoint", "h3", data!("rep_h3_adjoint.json")),
    ("aff1_standard", "aff1", data!("rep_aff1_standard.json")),
];

pub const ALGEBROIDS: &[(&str, &str)] = &[
    ("const_1", data!("algebroid_const_1.json")),
    ("sin_t", data!("algebroid_sin_t.json")),
    ("sin_2t", data!("algebroid_sin_2t.json")),
    ("action_r", data!("algebroid_action_r.json")),
    ("action_sl2", data!("algebroid_action_sl2.json")),
];

pub const FIBERS: &[(&str, &str)] = &[
    ("sl2_circle", data!("fiber_sl2_circle.json")),
    ("rank3_plane", data!("fiber_rank3_plane.json")),
];

fn lookup<'a>(table: &[(&'a str, &'a str)], name: &str) -> Option<&'a str> {
    table
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

/// Built-in algebra by name. Panics only if shipped data is malformed.
pub fn algebra(name: &str) -> Option<LieAlgebra> {
    lookup(ALGEBRAS, name).map(|t| parse_lie_algebra(t).expect("built-in algebra"))
}

pub fn representation(name: &str) -> Option<Representation> {
    let (_, base, text) = REPRESENTATIONS.iter().find(|(n, _, _)| *n == name)?;
    let g = algebra(base)?;
    Some(
        parse_representation(text)
            .and_then(|r| r.bind(g))
            .expect("built-in representation"),
    )
}

pub fn algebroid(name: &str) -> Option<AlgebroidSpec> {
    lookup(ALGEBROIDS, name).map(|t| parse_algebroid(t).expect("built-in algebroid"))
}

pub fn fiber(name: &str) -> Option<FiberData> {
    lookup(FIBERS, name).map(|t| parse_fiber(t).expect("built-in fiber"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{
        algebroid_to_json, fiber_to_json, lie_algebra_to_json, representation_to_json,
    };
    use crate::liealg::{check_jacobi, check_representation};

    #[test]
    fn shipped_files_are_canonical() {
        for (name, text) in ALGEBRAS {
            let g = algebra(name).unwrap();
            assert!(check_jacobi(&g), "{name}");
            assert_eq!(lie_algebra_to_json(&g), *text, "{name}");
        }
        for (name, _, text) in REPRESENTATIONS {
            let r = representation(name).unwrap();
            assert!(check_representation(&r), "{name}");
            assert_eq!(
                representation_to_json(&parse_representation(text).unwrap()),
                *text
            );
        }
        for (name, text) in ALGEBROIDS {
            let a = algebroid(name).unwrap();
            a.algebroid.validate().unwrap();
            assert_eq!(algebroid_to_json(&a), *text, "{name}");
        }
        for (name, text) in FIBERS {
            assert_eq!(fiber_to_json(&fiber(name).unwrap()), *text, "{name}");
        }
    }

    #[test]
    fn unknown_names() {
        assert!(algebra("e8").is_none());
        assert!(representation("e8").is_none());
    }
}
