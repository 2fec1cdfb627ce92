//! Simplicial complexes, chains, boundary operators, and shadow maps.

use crate::arith::{ArithError, FieldSpec, Scalar};
use itertools::Itertools;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("facet on line {line} repeats vertex {vertex}")]
    DuplicateVertexInFacet { line: usize, vertex: u32 },
    #[error("no facets given")]
    Empty,
    #[error("dimension {d} out of range for this operation (complex has dimension {max})")]
    DimensionOutOfRange { d: usize, max: usize },
    #[error("expected simplices of one dimension, found {0} and {1}")]
    MixedDimensions(usize, usize),
    #[error("simplex {0} does not belong to the complex at the expected dimension")]
    NotInComplex(Simplex),
    #[error("cannot parse facet file at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// A simplex as a strictly increasing vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    /// Sorts the vertices; rejects repeated ones.
    pub fn new(mut vertices: Vec<u32>) -> Result<Simplex, ComplexError> {
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(ComplexError::DuplicateVertexInFacet { line: 0, vertex: w[0] });
            }
        }
        Ok(Simplex(vertices))
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The codimension-one faces, in the order that omits vertex j at step j.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |j| {
            let mut v = self.0.clone();
            v.remove(j);
            Simplex(v)
        })
    }

    pub fn contains(&self, other: &Simplex) -> bool {
        other.0.iter().all(|v| self.0.binary_search(v).is_ok())
    }
}

/// Colex order: compare largest vertices first. Total across dimensions;
/// within one dimension this is the colexicographic order on vertex sets.
impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("-"))
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Position of a k-set in colex order, counting from 0.
pub fn colex_rank(simplex: &Simplex) -> u64 {
    simplex
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| binomial(v as u64, i as u64 + 1))
        .sum()
}

/// Inverse of `colex_rank` for sets of the given size.
pub fn colex_unrank(mut rank: u64, size: usize) -> Simplex {
    let mut vertices = vec![0u32; size];
    for i in (1..=size as u64).rev() {
        // Largest v with C(v, i) <= rank.
        let mut v = i - 1;
        while binomial(v + 1, i) <= rank {
            v += 1;
        }
        rank -= binomial(v, i);
        vertices[i as usize - 1] = v as u32;
    }
    Simplex(vertices)
}

/// A finite simplicial complex, stored one dimension at a time in colex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    faces: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    pure: bool,
}

impl SimplicialComplex {
    /// Downward closure of the given facets. Purity (every maximal face has
    /// top dimension) is recorded, not required.
    pub fn from_facets(facets: &[Vec<u32>]) -> Result<SimplicialComplex, ComplexError> {
        if facets.is_empty() {
            return Err(ComplexError::Empty);
        }
        let mut simplices: Vec<Simplex> = Vec::new();
        for (i, f) in facets.iter().enumerate() {
            let s = Simplex::new(f.clone()).map_err(|e| match e {
                ComplexError::DuplicateVertexInFacet { vertex, .. } => {
                    ComplexError::DuplicateVertexInFacet { line: i + 1, vertex }
                }
                other => other,
            })?;
            simplices.push(s);
        }
        let dim = simplices.iter().map(|s| s.dim()).max().expect("nonempty");
        let mut levels: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); dim + 1];
        for s in &simplices {
            for k in 1..=s.vertices().len() {
                for combo in s.vertices().iter().copied().combinations(k) {
                    levels[k - 1].insert(Simplex(combo));
                }
            }
        }
        let faces: Vec<Vec<Simplex>> = levels.into_iter().map(|set| set.into_iter().collect()).collect();
        let mut index = Vec::with_capacity(faces.len());
        for level in &faces {
            let mut map = HashMap::with_capacity(level.len());
            for (i, s) in level.iter().enumerate() {
                map.insert(s.clone(), i);
            }
            index.push(map);
        }
        let mut complex = SimplicialComplex { faces, index, pure: true };
        complex.pure = complex.compute_purity();
        Ok(complex)
    }

    fn compute_purity(&self) -> bool {
        let d = self.dimension();
        for i in 0..d {
            let above: BTreeSet<Simplex> = self.faces[i + 1]
                .iter()
                .flat_map(|s| s.facets())
                .collect();
            if self.faces[i].iter().any(|s| !above.contains(s)) {
                return false;
            }
        }
        true
    }

    pub fn dimension(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn is_pure(&self) -> bool {
        self.pure
    }

    /// Faces of one dimension, colex-sorted. Empty slice above the dimension.
    pub fn faces(&self, d: usize) -> &[Simplex] {
        if d < self.faces.len() {
            &self.faces[d]
        } else {
            &[]
        }
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        s.dim() < self.faces.len() && self.index[s.dim()].contains_key(s)
    }

    pub fn face_index(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    /// Face counts from top dimension down: (f_d, ..., f_0).
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().rev().map(|level| level.len()).collect()
    }

    /// Maximal faces, ascending dimension then colex.
    pub fn maximal_faces(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for d in 0..=self.dimension() {
            let above: BTreeSet<Simplex> = if d + 1 <= self.dimension() {
                self.faces[d + 1].iter().flat_map(|s| s.facets()).collect()
            } else {
                BTreeSet::new()
            };
            for s in &self.faces[d] {
                if !above.contains(s) {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Parses the facet file format: one facet per line as whitespace-separated
    /// vertex ids, '#' starts a comment, blank lines are skipped.
    pub fn parse_facet_text(text: &str) -> Result<SimplicialComplex, ComplexError> {
        let mut facets: Vec<Vec<u32>> = Vec::new();
        let mut facet_lines: Vec<usize> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.split_once('#') {
                Some((head, _)) => head,
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut vertices = Vec::new();
            for tok in line.split_whitespace() {
                let v: u32 = tok.parse().map_err(|_| ComplexError::Parse {
                    line: lineno + 1,
                    reason: format!("bad vertex id {tok:?}"),
                })?;
                vertices.push(v);
            }
            facets.push(vertices);
            facet_lines.push(lineno + 1);
        }
        if facets.is_empty() {
            return Err(ComplexError::Empty);
        }
        SimplicialComplex::from_facets(&facets).map_err(|e| match e {
            ComplexError::DuplicateVertexInFacet { line, vertex } => {
                ComplexError::DuplicateVertexInFacet { line: facet_lines[line - 1], vertex }
            }
            other => other,
        })
    }

    /// Serializes the maximal faces; `parse_facet_text` rebuilds an equal complex.
    pub fn to_facet_text(&self) -> String {
        let mut out = String::from("# facets, one per line\n");
        for s in self.maximal_faces() {
            let parts: Vec<String> = s.vertices().iter().map(|v| v.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A formal field combination of equal-dimension simplices. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<Simplex, Scalar>,
}

impl Chain {
    pub fn empty(degree: usize) -> Chain {
        Chain { degree, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, s: &Simplex) -> Option<&Scalar> {
        self.terms.get(s)
    }

    /// Terms in colex order of their simplices.
    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Simplex> {
        self.terms.keys().cloned().collect()
    }

    /// Adds c*s into the chain, dropping the term if it cancels.
    pub fn add_term(&mut self, s: Simplex, c: Scalar) -> Result<(), ComplexError> {
        if c.is_zero() {
            return Ok(());
        }
        if s.dim() != self.degree {
            return Err(ComplexError::MixedDimensions(self.degree, s.dim()));
        }
        match self.terms.remove(&s) {
            None => {
                self.terms.insert(s, c);
            }
            Some(old) => {
                let sum = old.add(&c)?;
                if !sum.is_zero() {
                    self.terms.insert(s, sum);
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Chain) -> Result<Chain, ComplexError> {
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(ComplexError::MixedDimensions(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Scalar) -> Result<Chain, ComplexError> {
        let mut out = Chain::empty(self.degree);
        for (s, c) in self.terms() {
            out.add_term(s.clone(), c.mul(factor)?)?;
        }
        Ok(out)
    }
}

/// The alternating-sign boundary: the face omitting vertex j enters with
/// sign (-1)^j. Dimension 0 yields the empty chain.
pub fn boundary_of_simplex(s: &Simplex, field: FieldSpec) -> Chain {
    if s.dim() == 0 {
        return Chain::empty(0);
    }
    let mut chain = Chain::empty(s.dim() - 1);
    for (j, face) in s.facets().enumerate() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        chain
            .add_term(face, field.integer(sign))
            .expect("facets share one dimension and signs are nonzero");
    }
    chain
}

/// Linear extension of the boundary to chains of degree >= 1.
pub fn apply_boundary(chain: &Chain, field: FieldSpec) -> Result<Chain, ComplexError> {
    if chain.degree() == 0 {
        return Err(ComplexError::DimensionOutOfRange { d: 0, max: 0 });
    }
    let mut out = Chain::empty(chain.degree() - 1);
    for (s, c) in chain.terms() {
        let part = boundary_of_simplex(s, field).scale(c)?;
        out = out.add(&part)?;
    }
    Ok(out)
}

/// The d-th boundary matrix: one column per d-face, one row per (d-1)-face,
/// both in colex order; entries are the signs embedded in the field.
#[derive(Debug, Clone)]
pub struct BoundaryMatrix {
    pub field: FieldSpec,
    pub row_faces: Vec<Simplex>,
    pub col_faces: Vec<Simplex>,
    /// columns[j][i] is the coefficient of row face i in the boundary of column face j.
    pub columns: Vec<Vec<Scalar>>,
}

pub fn boundary_matrix(
    k: &SimplicialComplex,
    d: usize,
    field: FieldSpec,
) -> Result<BoundaryMatrix, ComplexError> {
    if d == 0 || d > k.dimension() {
        return Err(ComplexError::DimensionOutOfRange { d, max: k.dimension() });
    }
    let row_faces: Vec<Simplex> = k.faces(d - 1).to_vec();
    let col_faces: Vec<Simplex> = k.faces(d).to_vec();
    let row_index: HashMap<&Simplex, usize> =
        row_faces.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut columns = Vec::with_capacity(col_faces.len());
    for s in &col_faces {
        let mut col = vec![field.zero(); row_faces.len()];
        for (face, coeff) in boundary_of_simplex(s, field).terms() {
            let i = *row_index.get(face).expect("complex is downward closed");
            col[i] = coeff.clone();
        }
        columns.push(col);
    }
    Ok(BoundaryMatrix { field, row_faces, col_faces, columns })
}

fn check_uniform_dimension(faces: &[Simplex]) -> Result<Option<usize>, ComplexError> {
    let mut dim = None;
    for s in faces {
        match dim {
            None => dim = Some(s.dim()),
            Some(d) if d != s.dim() => return Err(ComplexError::MixedDimensions(d, s.dim())),
            _ => {}
        }
    }
    Ok(dim)
}

/// All codimension-one faces of a family of d-simplices (d >= 1), colex-sorted.
pub fn lower_shadow(faces: &[Simplex]) -> Result<Vec<Simplex>, ComplexError> {
    match check_uniform_dimension(faces)? {
        None => Ok(Vec::new()),
        Some(0) => Err(ComplexError::DimensionOutOfRange { d: 0, max: 0 }),
        Some(_) => {
            let set: BTreeSet<Simplex> = faces.iter().flat_map(|s| s.facets()).collect();
            Ok(set.into_iter().collect())
        }
    }
}

/// The d-simplices of the complex all of whose facets lie in the given
/// (d-1)-family. The family must consist of complex faces of one dimension.
pub fn upper_shadow(
    k: &SimplicialComplex,
    faces: &[Simplex],
) -> Result<Vec<Simplex>, ComplexError> {
    let dim = match check_uniform_dimension(faces)? {
        None => return Ok(Vec::new()),
        Some(d) => d,
    };
    let set: BTreeSet<&Simplex> = faces.iter().collect();
    for s in faces {
        if !k.contains(s) {
            return Err(ComplexError::NotInComplex(s.clone()));
        }
    }
    let d = dim + 1;
    let mut out = Vec::new();
    for s in k.faces(d) {
        if s.facets().all(|f| set.contains(&f)) {
            out.push(s.clone());
        }
    }
    Ok(out)
}

/// upper(lower(A)): a cheap combinatorial superset of the matroid closure of A.
pub fn pseudo_closure(
    k: &SimplicialComplex,
    faces: &[Simplex],
) -> Result<Vec<Simplex>, ComplexError> {
    if faces.is_empty() {
        return Ok(Vec::new());
    }
    let shadow = lower_shadow(faces)?;
    upper_shadow(k, &shadow)
}
