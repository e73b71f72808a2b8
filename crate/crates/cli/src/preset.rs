use rlsa_core::Problem;

/// A named hyperparameter row for one benchmark family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub problem: Problem,
    pub tau0: f64,
    pub d: usize,
    pub chains: usize,
    pub steps: usize,
    pub beta: f64,
}

const fn row(
    name: &'static str,
    problem: Problem,
    tau0: f64,
    d: usize,
    chains: usize,
    steps: usize,
    beta: f64,
) -> Preset {
    Preset {
        name,
        problem,
        tau0,
        d,
        chains,
        steps,
        beta,
    }
}

/// RB/BA "small" is 200–300 nodes and "large" 800–1200; ER "small" is 700–800
/// nodes and "large" 9000–11000.
pub const PRESETS: &[Preset] = &[
    row("mis-rb-small", Problem::Mis, 0.01, 5, 200, 300, 1.02),
    row("mis-rb-large", Problem::Mis, 0.01, 5, 200, 500, 1.02),
    row("mis-er-small", Problem::Mis, 0.01, 20, 200, 500, 1.001),
    row("mis-er-large", Problem::Mis, 0.01, 20, 200, 5000, 1.001),
    row("mcl-rb-small", Problem::Mcl, 4.0, 2, 200, 100, 1.02),
    row("mcl-rb-large", Problem::Mcl, 4.0, 2, 200, 500, 1.02),
    row("mcut-ba-small", Problem::Mcut, 5.0, 20, 200, 200, 1.02),
    row("mcut-ba-large", Problem::Mcut, 5.0, 20, 200, 500, 1.02),
];

pub fn find(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_small_row() {
        let p = find("mis-er-small").unwrap();
        assert_eq!(
            (p.tau0, p.d, p.chains, p.steps, p.beta),
            (0.01, 20, 200, 500, 1.001)
        );
        assert_eq!(p.problem, Problem::Mis);
    }

    #[test]
    fn clique_small_row() {
        let p = find("mcl-rb-small").unwrap();
        assert_eq!(
            (p.tau0, p.d, p.chains, p.steps, p.beta),
            (4.0, 2, 200, 100, 1.02)
        );
    }

    #[test]
    fn unknown_preset() {
        assert!(find("tsp").is_none());
        let mut names: Vec<_> = PRESETS.iter().map(|p| p.name).collect();
        names.dedup();
        assert_eq!(names.len(), 8);
    }
}
