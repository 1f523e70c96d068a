//! Derived subgroup, center, lower central series, class and exponent of a
//! presented group.

use super::group::{normal_closure, subgroup_closure, FiniteGroup, Subgroup};
use super::presentation::{Element, PcPresentation, NGENS};

impl PcPresentation {
    /// Normal closure of the commutators of all generator pairs.
    pub fn derived_subgroup(&self) -> Subgroup<Element> {
        let mut comms = Vec::new();
        for j in 1..=NGENS {
            for i in 1..j {
                comms.push(self.commutator(&Element::generator(j), &Element::generator(i)));
            }
        }
        normal_closure(self, &comms)
    }

    /// Elements commuting with all five generators.
    pub fn center(&self, all: &Subgroup<Element>) -> Subgroup<Element> {
        let gens = self.generators();
        let central: Vec<Element> = all
            .elements()
            .iter()
            .filter(|x| gens.iter().all(|g| self.multiply(x, g) == self.multiply(g, x)))
            .copied()
            .collect();
        // The central elements already form a subgroup; closing over them
        // keeps the generator list honest.
        let sub = subgroup_closure(self, &central);
        debug_assert_eq!(sub.order(), central.len());
        sub
    }

    /// `γ₁ = G, γ_{k+1} = [γ_k, G]`, ending with the trivial subgroup.
    pub fn lower_central_series(&self) -> Vec<Subgroup<Element>> {
        let gens = self.generators();
        let mut series = vec![subgroup_closure(self, &gens)];
        loop {
            let last = series.last().expect("series is non-empty");
            if last.is_trivial() {
                return series;
            }
            let comms: Vec<Element> = last
                .generators()
                .iter()
                .flat_map(|x| gens.iter().map(move |g| (x, g)))
                .map(|(x, g)| self.commutator(x, g))
                .collect();
            let next = normal_closure(self, &comms);
            assert!(
                next.order() < last.order(),
                "lower central series stalled at order {}",
                last.order()
            );
            series.push(next);
        }
    }

    pub fn nilpotency_class(&self) -> usize {
        self.lower_central_series().len() - 1
    }

    /// `log_p exp(G)`, the largest element order over the given elements.
    pub fn log_exponent(&self, all: &Subgroup<Element>) -> u32 {
        all.elements().iter().map(|x| self.log_order_of(x)).max().unwrap_or(0)
    }
}
