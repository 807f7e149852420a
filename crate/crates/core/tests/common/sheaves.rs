//! Presheaves of sets on small sites, with hand-computed sheafifications.

use hpk::site::fixtures::*;
use hpk::site::{Elements, FiniteSite, Presheaf};

pub fn set(labels: &[&str]) -> Elements {
    Elements(labels.iter().map(|s| s.to_string()).collect())
}

/// Presheaf on the open cover `X ⊇ A, B ⊇ W` from values and a rule for
/// restricting along each proper inclusion.
pub fn on_opens(
    c: &FiniteSite,
    values: Vec<Elements>,
    restrict: impl Fn(usize, usize, usize) -> usize,
) -> Presheaf<Elements> {
    let restrictions = c
        .arrows
        .iter()
        .map(|a| {
            (0..values[a.target].len())
                .map(|x| {
                    if a.source == a.target {
                        x
                    } else {
                        restrict(a.target, a.source, x)
                    }
                })
                .collect()
        })
        .collect();
    Presheaf {
        values,
        restrictions,
    }
}

pub fn sheaf_fixtures() -> Vec<(&'static str, FiniteSite, Presheaf<Elements>)> {
    let two = two_object();
    let opens = two_opens();
    let collapse = Presheaf {
        values: vec![set(&["a", "b"]), set(&["c"])],
        restrictions: vec![vec![0, 1], vec![0], vec![0, 0]],
    };
    let empty_over_u = Presheaf {
        values: vec![set(&[]), set(&["c", "d"])],
        restrictions: vec![vec![], vec![0, 1], vec![]],
    };
    // B and W are points, A has two sections; X has three sections
    let opens_values = vec![
        set(&["x", "y", "z"]),
        set(&["p", "q"]),
        set(&["r"]),
        set(&["s"]),
    ];
    let non_separated = on_opens(&opens, opens_values, |from, to, x| match (from, to) {
        (0, 1) => x.min(1),
        _ => 0,
    });
    // sections over A and B disagreeing on W cannot glue
    let disagree = on_opens(
        &opens,
        vec![
            set(&[]),
            set(&["p", "q"]),
            set(&["r", "t"]),
            set(&["s", "u"]),
        ],
        |_, _, x| x,
    );
    vec![
        ("two-object collapse", two.clone(), collapse.clone()),
        (
            "two-object, trivial topology",
            two.trivial_topology(),
            collapse,
        ),
        ("two-object, empty over U", two, empty_over_u),
        ("two opens, non-separated", opens.clone(), non_separated),
        ("two opens, compatible pairs", opens, disagree),
        (
            "one object",
            one_object(),
            Presheaf::constant(&one_object(), &set(&["a", "b", "c"])),
        ),
    ]
}
