//! Scenario fixtures bundled into the binary.

/// One bundled scenario.
#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    pub source: &'static str,
}

/// Every bundled scenario, in suite order.
pub const FIXTURES: [Fixture; 9] = [
    Fixture {
        name: "paper_iii_a",
        summary: "exact single-qubit preparation over the two-qubit singlet, all four parameter families",
        source: include_str!("../fixtures/paper_iii_a.scn"),
    },
    Fixture {
        name: "paper_iii_b",
        summary: "exact multi-party qubit preparation over paired and matched singlet products",
        source: include_str!("../fixtures/paper_iii_b.scn"),
    },
    Fixture {
        name: "paper_iii_c",
        summary: "probabilistic preparation over the superposed four-qubit resource, with a sampled replay",
        source: include_str!("../fixtures/paper_iii_c.scn"),
    },
    Fixture {
        name: "paper_iv_a",
        summary: "exact qutrit preparation from the equal-magnitude phase family",
        source: include_str!("../fixtures/paper_iv_a.scn"),
    },
    Fixture {
        name: "paper_iv_b",
        summary: "exact two-party qutrit preparation over a product of antisymmetric resources",
        source: include_str!("../fixtures/paper_iv_b.scn"),
    },
    Fixture {
        name: "paper_iv_c",
        summary: "probabilistic qutrit preparation with the general and restricted families",
        source: include_str!("../fixtures/paper_iv_c.scn"),
    },
    Fixture {
        name: "paper_iv_d",
        summary: "joint preparation: two senders steer one receiver's qutrit",
        source: include_str!("../fixtures/paper_iv_d.scn"),
    },
    Fixture {
        name: "paper_v_a",
        summary: "exact qudit preparation from phase families in dimensions three, four, and five",
        source: include_str!("../fixtures/paper_v_a.scn"),
    },
    Fixture {
        name: "paper_v_b",
        summary: "probabilistic four-dimensional preparation with the general and restricted families",
        source: include_str!("../fixtures/paper_v_b.scn"),
    },
];

/// Looks a fixture up by name, with or without the `.scn` suffix.
pub fn find(name: &str) -> Option<&'static Fixture> {
    let stem = name.strip_suffix(".scn").unwrap_or(name);
    FIXTURES.iter().find(|f| f.name == stem)
}
