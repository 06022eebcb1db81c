mod common;

use common::*;
use tt2::delta::*;

#[test]
fn enumeration_is_the_monotone_subset() {
    for n in 0..=6 {
        for k in 0..=n + 1 {
            let got: Vec<Vec<usize>> = enumerate_mono(k, n).iter().map(|f| f.images().to_vec()).collect();
            let brute: Vec<Vec<usize>> = all_functions(k, n)
                .into_iter()
                .filter(|v| strictly_increasing(v))
                .collect();
            assert_eq!(got, brute, "[{k}] -> [{n}]");
            assert_eq!(got.len(), binomial(n + 1, k + 1));
        }
    }
}

#[test]
fn decomposition_round_trips() {
    for cod in 0..=5 {
        for dom in 0..=cod {
            for f in enumerate_mono(dom, cod) {
                let idx = face_decompose(&f);
                assert_eq!(idx.len(), cod - dom);
                assert!(idx.windows(2).all(|w| w[0] > w[1]));
                assert_eq!(recompose(cod, &idx).unwrap(), f);
            }
        }
    }
}

#[test]
fn cofaces_compose_pointwise() {
    for cod in 1..=5 {
        for i in 0..=cod {
            let d = MonoMap::coface(cod, i).unwrap();
            for x in 0..cod {
                assert_eq!(d.apply(x), if x < i { x } else { x + 1 });
            }
        }
    }
    // cosimplicial identity d_j d_i = d_i d_{j-1} for i < j
    for n in 2..=5 {
        for j in 1..=n {
            for i in 0..j {
                let lhs = compose(&MonoMap::coface(n, j).unwrap(), &MonoMap::coface(n - 1, i).unwrap()).unwrap();
                let rhs = compose(&MonoMap::coface(n, i).unwrap(), &MonoMap::coface(n - 1, j - 1).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn composition_is_associative_and_unital() {
    let maps: Vec<MonoMap> = (0..=4)
        .flat_map(|c| (0..=c).flat_map(move |d| enumerate_mono(d, c)))
        .collect();
    for f in &maps {
        assert_eq!(&compose(&MonoMap::identity(f.cod()), f).unwrap(), f);
        assert_eq!(&compose(f, &MonoMap::identity(f.dom())).unwrap(), f);
        for g in maps.iter().filter(|g| g.dom() == f.cod()) {
            let gf = compose(g, f).unwrap();
            for x in 0..=f.dom() {
                assert_eq!(gf.apply(x), g.apply(f.apply(x)));
            }
            for h in maps.iter().filter(|h| h.dom() == g.cod()) {
                assert_eq!(compose(h, &gf).unwrap(), compose(&compose(h, g).unwrap(), f).unwrap());
            }
        }
    }
}

#[test]
fn boundary_cells_are_proper_faces() {
    for n in 0..=6 {
        let cells = boundary_cells(n);
        assert_eq!(cells.len(), (1usize << (n + 1)) - 2);
        for c in &cells {
            assert!(c.dim() < n);
            assert_eq!(c.inclusion(n).images(), c.vertices());
        }
        let dims: Vec<usize> = cells.iter().map(|c| c.dim()).collect();
        assert!(dims.windows(2).all(|w| w[0] <= w[1]));
    }
}
