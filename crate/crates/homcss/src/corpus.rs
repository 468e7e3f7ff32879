//! Seeded random generation of complexes for the property suites: random
//! facet closures, toric grids, tensor products, and voltage covers.
//!
//! Everything is driven by a ChaCha stream cipher, so a fixed seed yields
//! a byte-identical corpus on every platform and run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builders::{
    self, build_cover, gauge_transform, toric_cyclic_voltages, CoverBase, Permutation,
    SimplicialInput, VoltageCover,
};
use crate::complex::ChainComplex;

/// A corpus entry: the complex plus a short description of how it was
/// built, for failure messages.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub description: String,
    pub complex: ChainComplex,
}

/// A cover entry retains the base for comparison checks.
#[derive(Clone, Debug)]
pub struct CoverEntry {
    pub description: String,
    pub base: ChainComplex,
    pub cover: ChainComplex,
    pub sheets: usize,
}

fn random_permutation(rng: &mut ChaCha8Rng, m: usize) -> Permutation {
    let mut map: Vec<usize> = (0..m).collect();
    // Fisher–Yates with the seeded stream
    for i in (1..m).rev() {
        let j = rng.gen_range(0..=i);
        map.swap(i, j);
    }
    Permutation::new(map).expect("shuffled identity is a permutation")
}

fn random_facet_complex(rng: &mut ChaCha8Rng) -> CorpusEntry {
    let vertices = rng.gen_range(4..=8usize);
    let facet_count = rng.gen_range(3..=10usize);
    let mut facets = Vec::with_capacity(facet_count);
    for _ in 0..facet_count {
        let size = rng.gen_range(2..=4usize.min(vertices));
        let mut facet = Vec::with_capacity(size);
        while facet.len() < size {
            let v = rng.gen_range(0..vertices);
            if !facet.contains(&v) {
                facet.push(v);
            }
        }
        facets.push(facet);
    }
    let data = builders::from_facets(&SimplicialInput::new(facets.clone()));
    CorpusEntry {
        description: format!("facets {facets:?}"),
        complex: data.complex,
    }
}

fn random_product(rng: &mut ChaCha8Rng) -> CorpusEntry {
    let left = small_factor(rng);
    let right = small_factor(rng);
    let complex = left
        .complex
        .tensor_product(&right.complex)
        .expect("factors are valid");
    CorpusEntry {
        description: format!("product[{} x {}]", left.description, right.description),
        complex,
    }
}

fn small_factor(rng: &mut ChaCha8Rng) -> CorpusEntry {
    match rng.gen_range(0..3u8) {
        0 => {
            let n = rng.gen_range(2..=4usize);
            CorpusEntry {
                description: format!("circle({n})"),
                complex: builders::circle(n).unwrap().complex,
            }
        }
        1 => CorpusEntry {
            description: "interval".into(),
            complex: builders::from_facets(&SimplicialInput::new(vec![vec![0, 1]])).complex,
        },
        _ => {
            let l = rng.gen_range(2..=3usize);
            CorpusEntry {
                description: format!("toric({l})"),
                complex: builders::toric_grid(l).unwrap().complex,
            }
        }
    }
}

/// A random valid (flat) voltage cover over a random small base. Three
/// families: circles with fully random voltages (no 2-cells, so every
/// assignment is flat), toric grids with commuting cyclic shifts plus a
/// random gauge, and 2-dimensional facet closures with gauge-transformed
/// trivial voltages.
pub fn random_cover(rng: &mut ChaCha8Rng, max_sheets: usize) -> CoverEntry {
    let m = rng.gen_range(1..=max_sheets);
    match rng.gen_range(0..3u8) {
        0 => {
            let n = rng.gen_range(2..=5usize);
            let base = builders::circle(n).unwrap();
            let voltages = (0..n).map(|_| random_permutation(rng, m)).collect();
            let cover = build_cover(
                CoverBase::Polyhedral(&base),
                &VoltageCover { sheets: m, voltages },
            )
            .expect("circle voltages are always flat");
            CoverEntry {
                description: format!("circle({n}) cover, m={m}"),
                base: base.complex,
                cover: cover.complex,
                sheets: m,
            }
        }
        1 => {
            let l = rng.gen_range(2..=3usize);
            let base = builders::toric_grid(l).unwrap();
            let p = rng.gen_range(0..m);
            let q = rng.gen_range(0..m);
            let gauge: Vec<Permutation> = (0..base.complex.cells(0))
                .map(|_| random_permutation(rng, m))
                .collect();
            let v = gauge_transform(
                &base.skeleton.edge_ends,
                &toric_cyclic_voltages(l, m, p, q),
                &gauge,
            );
            let cover = build_cover(CoverBase::Polyhedral(&base), &v)
                .expect("gauged cyclic voltages are flat");
            CoverEntry {
                description: format!("toric({l}) cover, m={m}, shifts ({p},{q})"),
                base: base.complex,
                cover: cover.complex,
                sheets: m,
            }
        }
        _ => {
            let data = builders::from_facets(&SimplicialInput::new(
                builders::seven_vertex_torus_facets(),
            ));
            let edges: Vec<(usize, usize)> =
                data.cells[1].iter().map(|e| (e[0], e[1])).collect();
            let gauge: Vec<Permutation> = (0..data.complex.cells(0))
                .map(|_| random_permutation(rng, m))
                .collect();
            let v = gauge_transform(
                &edges,
                &VoltageCover::trivial(m, data.complex.cells(1)),
                &gauge,
            );
            let cover = build_cover(CoverBase::Simplicial(&data), &v)
                .expect("gauged trivial voltages are flat");
            CoverEntry {
                description: format!("7-vertex torus cover, m={m}"),
                base: data.complex,
                cover: cover.complex,
                sheets: m,
            }
        }
    }
}

/// Generates `count` random complexes: facet closures, products, toric
/// grids and covers, in a deterministic seed-driven mix.
pub fn random_complexes(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let entry = match rng.gen_range(0..4u8) {
            0 | 1 => random_facet_complex(&mut rng),
            2 => random_product(&mut rng),
            _ => {
                let c = random_cover(&mut rng, 4);
                CorpusEntry {
                    description: c.description,
                    complex: c.cover,
                }
            }
        };
        out.push(entry);
    }
    out
}

/// Generates `count` random covers with at most `max_sheets` sheets.
pub fn random_covers(seed: u64, count: usize, max_sheets: usize) -> Vec<CoverEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_cover(&mut rng, max_sheets)).collect()
}
