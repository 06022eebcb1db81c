//! Strictly monotone maps between finite ordinals and the boundary cells
//! of a simplex.
//!
//! The ordinal `[n]` has the `n + 1` elements `0..=n`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaError {
    #[error("a map [{dom}] -> [{cod}] needs {} images, got {got}", dom + 1)]
    WrongLength { dom: usize, cod: usize, got: usize },
    #[error("images are not strictly increasing")]
    NotMonotone,
    #[error("image {image} is outside [{cod}]")]
    OutOfRange { image: usize, cod: usize },
    #[error("cannot compose: codomain [{inner}] differs from domain [{outer}]")]
    DomainMismatch { inner: usize, outer: usize },
    #[error("coface index {index} is outside [{cod}]")]
    BadCoface { index: usize, cod: usize },
}

/// A strictly monotone map `[dom] -> [cod]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoMap {
    dom: usize,
    cod: usize,
    images: Vec<usize>,
}

impl MonoMap {
    pub fn new(dom: usize, cod: usize, images: Vec<usize>) -> Result<MonoMap, DeltaError> {
        if images.len() != dom + 1 {
            return Err(DeltaError::WrongLength {
                dom,
                cod,
                got: images.len(),
            });
        }
        if images.windows(2).any(|w| w[0] >= w[1]) {
            return Err(DeltaError::NotMonotone);
        }
        if let Some(&image) = images.iter().find(|&&x| x > cod) {
            return Err(DeltaError::OutOfRange { image, cod });
        }
        Ok(MonoMap { dom, cod, images })
    }

    pub fn identity(n: usize) -> MonoMap {
        MonoMap {
            dom: n,
            cod: n,
            images: (0..=n).collect(),
        }
    }

    /// The elementary coface `d_i : [cod - 1] -> [cod]` that skips `i`.
    pub fn coface(cod: usize, i: usize) -> Result<MonoMap, DeltaError> {
        if cod == 0 || i > cod {
            return Err(DeltaError::BadCoface { index: i, cod });
        }
        let images = (0..=cod).filter(|&x| x != i).collect();
        Ok(MonoMap {
            dom: cod - 1,
            cod,
            images,
        })
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }
}

impl fmt::Display for MonoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// `g ∘ f`.
pub fn compose(g: &MonoMap, f: &MonoMap) -> Result<MonoMap, DeltaError> {
    if f.cod != g.dom {
        return Err(DeltaError::DomainMismatch {
            inner: f.cod,
            outer: g.dom,
        });
    }
    Ok(MonoMap {
        dom: f.dom,
        cod: g.cod,
        images: f.images.iter().map(|&x| g.images[x]).collect(),
    })
}

/// All strictly monotone maps `[k] -> [n]` in lexicographic order of images.
pub fn enumerate_mono(k: usize, n: usize) -> Vec<MonoMap> {
    subsets(n + 1, k + 1)
        .into_iter()
        .map(|images| MonoMap { dom: k, cod: n, images })
        .collect()
}

/// All `size`-element subsets of `0..count`, each sorted, in lex order.
fn subsets(count: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, count: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        let needed = size - cur.len();
        for x in start..count {
            if count - x < needed {
                break;
            }
            cur.push(x);
            go(x + 1, count, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size <= count {
        go(0, count, size, &mut Vec::new(), &mut out);
    }
    out
}

/// Indices `i₁ > i₂ > … > i_m` with `f = d_{i₁} ∘ d_{i₂} ∘ … ∘ d_{i_m}`:
/// the points missed by `f`, largest first.
pub fn face_decompose(f: &MonoMap) -> Vec<usize> {
    (0..=f.cod).rev().filter(|x| !f.images.contains(x)).collect()
}

/// Compose the cofaces `d_{i₁} ∘ … ∘ d_{i_m}` into a map with codomain `[cod]`.
pub fn recompose(cod: usize, indices: &[usize]) -> Result<MonoMap, DeltaError> {
    let dom = cod
        .checked_sub(indices.len())
        .ok_or(DeltaError::BadCoface { index: 0, cod })?;
    let mut acc = MonoMap::identity(dom);
    for &i in indices.iter().rev() {
        acc = compose(&MonoMap::coface(acc.cod + 1, i)?, &acc)?;
    }
    Ok(acc)
}

/// A face of a simplex, given by its vertices in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    vertices: Vec<usize>,
}

impl Cell {
    pub fn new(vertices: Vec<usize>) -> Option<Cell> {
        if vertices.is_empty() || vertices.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        Some(Cell { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The inclusion `[dim] -> [n]` of this cell into the `n`-simplex.
    pub fn inclusion(&self, n: usize) -> MonoMap {
        MonoMap::new(self.dim(), n, self.vertices.clone()).expect("cell inside the simplex")
    }

    /// Proper faces of this cell, in the same order as [`boundary_cells`].
    pub fn proper_faces(&self) -> Vec<Cell> {
        boundary_cells(self.dim())
            .into_iter()
            .map(|c| Cell {
                vertices: c.vertices.iter().map(|&v| self.vertices[v]).collect(),
            })
            .collect()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Non-empty proper subsets of `{0..n}`, by dimension and then
/// lexicographically.
pub fn boundary_cells(n: usize) -> Vec<Cell> {
    (0..n)
        .flat_map(|k| subsets(n + 1, k + 1))
        .map(|vertices| Cell { vertices })
        .collect()
}
