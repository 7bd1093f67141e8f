//! Randomized property tests tying the independent computation routes
//! together.

use num_bigint::BigInt;
use proptest::prelude::*;

use cocg_core::closed_form::{
    multipartite_distance_charpoly, spectrum_to_poly, star_distance_spectrum, star_dl_spectrum,
    star_dq_spectrum,
};
use cocg_core::graph::{dl_matrix, dq_matrix, Graph};
use cocg_core::linalg::{bareiss_det, char_poly, IntMatrix};
use cocg_core::BigPoly;

fn symmetric_matrix(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-9i64..=9, n * (n + 1) / 2).prop_map(move |vals| {
        let mut m = IntMatrix::zeros(n);
        let mut it = vals.into_iter();
        for i in 0..n {
            for j in i..n {
                let v = it.next().unwrap();
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The printed multipartite distance charpoly equals brute force.
    #[test]
    fn multipartite_formula_matches_brute_force(
        parts in proptest::collection::vec(1usize..=6, 2..=5)
    ) {
        let formula = multipartite_distance_charpoly(&parts).unwrap();
        let graph = Graph::complete_multipartite(&parts);
        let brute = char_poly(&graph.distance_matrix().unwrap()).unwrap();
        prop_assert_eq!(formula, brute);
    }

    /// Rebuilding a polynomial from each star spectrum recovers the exact
    /// characteristic polynomial of the corresponding matrix.
    #[test]
    fn star_spectra_round_trip(n in 2usize..=40) {
        let graph = Graph::complete_multipartite(&[1, n]);
        let d = graph.distance_matrix().unwrap();
        prop_assert_eq!(
            spectrum_to_poly(&star_distance_spectrum(n)).unwrap(),
            char_poly(&d).unwrap()
        );
        prop_assert_eq!(
            spectrum_to_poly(&star_dl_spectrum(n)).unwrap(),
            char_poly(&dl_matrix(&d)).unwrap()
        );
        prop_assert_eq!(
            spectrum_to_poly(&star_dq_spectrum(n)).unwrap(),
            char_poly(&dq_matrix(&d)).unwrap()
        );
    }

    /// char_poly evaluated at t equals det(tI - M) from the independent
    /// Bareiss route.
    #[test]
    fn charpoly_agrees_with_bareiss(m in symmetric_matrix(6), t in -10i64..=10) {
        let cp = char_poly(&m).unwrap();
        let mut shifted = IntMatrix::zeros(6);
        for i in 0..6 {
            for j in 0..6 {
                let v = if i == j { t - m.get(i, j) } else { -m.get(i, j) };
                shifted.set(i, j, v);
            }
        }
        prop_assert_eq!(cp.evaluate(&BigInt::from(t)), bareiss_det(&shifted));
    }

    /// Distances in a connected multipartite complement satisfy the
    /// triangle inequality and are 1 or 2 off the diagonal.
    #[test]
    fn multipartite_distances_are_metric(
        parts in proptest::collection::vec(1usize..=6, 2..=5)
    ) {
        let d = Graph::complete_multipartite(&parts)
            .distance_matrix()
            .unwrap();
        let n = d.dim();
        for i in 0..n {
            prop_assert_eq!(d.get(i, i), 0);
            for j in 0..n {
                if i != j {
                    prop_assert!(d.get(i, j) == 1 || d.get(i, j) == 2);
                }
                for k in 0..n {
                    prop_assert!(d.get(i, k) <= d.get(i, j) + d.get(j, k));
                }
            }
        }
    }

    /// Complementing twice is the identity.
    #[test]
    fn complement_involution(parts in proptest::collection::vec(1usize..=6, 2..=5)) {
        let g = Graph::complete_multipartite(&parts);
        let gg = g.complement().complement();
        prop_assert_eq!(g.vertex_count(), gg.vertex_count());
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                prop_assert_eq!(g.has_edge(u, v), gg.has_edge(u, v));
            }
        }
    }

    /// A constant-shifted identity has the obvious characteristic polynomial.
    #[test]
    fn charpoly_of_scalar_matrix(c in -20i64..=20, n in 1usize..=8) {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, c);
        }
        let expected = BigPoly::linear(&BigInt::from(c)).pow(n);
        prop_assert_eq!(char_poly(&m).unwrap(), expected);
    }
}
