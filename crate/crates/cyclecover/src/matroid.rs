//! Linear matroids over exact fields: rank oracle, closures, circuits,
//! minors, and connected components.

use crate::arith::{ArithError, FieldCtx, FieldSpec, PrimeCtx, RationalCtx, Scalar};
use crate::complex::{boundary_matrix, BoundaryMatrix, ComplexError, SimplicialComplex};
use num::rational::BigRational;
use std::collections::BTreeSet;
use std::sync::OnceLock;

/// Exhaustive operations refuse ground sets above this size unless forced.
pub const EXHAUSTIVE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatroidError {
    #[error("column {column} has {found} rows, expected {expected}")]
    InconsistentDimensions { expected: usize, found: usize, column: usize },
    #[error("element index {index} out of range for ground set of size {n}")]
    ElementOutOfRange { index: usize, n: usize },
    #[error("the given set is not independent")]
    NotIndependent,
    #[error("element {element} is not spanned by the given set")]
    NotInSpan { element: usize },
    #[error("deletion and contraction sets overlap")]
    OverlappingSets,
    #[error("ground set of size {n} exceeds the exhaustive limit {limit}; pass force to override")]
    GroundSetTooLarge { n: usize, limit: usize },
    #[error("cannot parse matrix file at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Incremental Gaussian elimination with coefficient tracking. Every inserted
/// column carries an augmented vector expressing the reduced column as a
/// combination of the inserted originals, so a column that reduces to zero
/// yields its kernel combination directly.
#[derive(Debug, Clone)]
pub(crate) struct Eliminator<C: FieldCtx> {
    ctx: C,
    inserted: usize,
    pivots: Vec<Pivot<C::Elem>>,
}

#[derive(Debug, Clone)]
struct Pivot<E> {
    row: usize,
    vec: Vec<E>,
    aug: Vec<E>,
}

/// Result of inserting one column.
pub(crate) enum Inserted<E> {
    /// Column was independent of the previous ones.
    Pivot,
    /// Column is spanned: coefficients over the inserted originals (its own
    /// trailing coefficient is one) summing to zero.
    Spanned(Vec<E>),
}

impl<C: FieldCtx + Clone> Eliminator<C> {
    pub fn new(ctx: C) -> Self {
        Eliminator { ctx, inserted: 0, pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces a copy of the column against the pivots; returns the residual
    /// and the combination coefficients over the inserted originals.
    pub fn reduce(&self, col: &[C::Elem]) -> (Vec<C::Elem>, Vec<C::Elem>) {
        let ctx = &self.ctx;
        let mut vec = col.to_vec();
        let mut aug: Vec<C::Elem> = vec![ctx.zero(); self.inserted];
        for p in &self.pivots {
            let factor = vec[p.row].clone();
            if ctx.is_zero(&factor) {
                continue;
            }
            for (a, b) in vec.iter_mut().zip(&p.vec) {
                *a = ctx.fused_sub_mul(a, &factor, b);
            }
            for (i, b) in p.aug.iter().enumerate() {
                aug[i] = ctx.fused_sub_mul(&aug[i], &factor, b);
            }
        }
        (vec, aug)
    }

    /// True if the column lies in the span of the inserted pivots.
    pub fn spans(&self, col: &[C::Elem]) -> bool {
        let ctx = &self.ctx;
        let mut vec = col.to_vec();
        for p in &self.pivots {
            let factor = vec[p.row].clone();
            if ctx.is_zero(&factor) {
                continue;
            }
            for (a, b) in vec.iter_mut().zip(&p.vec) {
                *a = ctx.fused_sub_mul(a, &factor, b);
            }
        }
        vec.iter().all(|a| self.ctx.is_zero(a))
    }

    /// Adds the column as a pivot if it is independent of the pivots so far;
    /// no coefficient tracking. Pairs with `pop_pivot` for DFS backtracking,
    /// which is sound because inserts never rewrite earlier pivots.
    pub fn push_if_independent(&mut self, col: &[C::Elem]) -> bool {
        let ctx = self.ctx.clone();
        let mut vec = col.to_vec();
        for p in &self.pivots {
            let factor = vec[p.row].clone();
            if ctx.is_zero(&factor) {
                continue;
            }
            for (a, b) in vec.iter_mut().zip(&p.vec) {
                *a = ctx.fused_sub_mul(a, &factor, b);
            }
        }
        let row = match vec.iter().position(|a| !ctx.is_zero(a)) {
            None => return false,
            Some(r) => r,
        };
        let inv = ctx.inv(&vec[row]);
        for a in vec.iter_mut() {
            *a = ctx.mul(a, &inv);
        }
        self.pivots.push(Pivot { row, vec, aug: Vec::new() });
        true
    }

    pub fn pop_pivot(&mut self) {
        self.pivots.pop().expect("pop_pivot pairs with a successful push");
    }

    /// Marks the current state so a run of inserts or pushes can be undone.
    /// Valid because neither operation rewrites earlier pivots.
    pub fn checkpoint(&self) -> (usize, usize) {
        (self.pivots.len(), self.inserted)
    }

    pub fn rollback(&mut self, mark: (usize, usize)) {
        self.pivots.truncate(mark.0);
        self.inserted = mark.1;
    }

    pub fn insert(&mut self, col: &[C::Elem]) -> Inserted<C::Elem> {
        let ctx = self.ctx.clone();
        let (mut vec, mut aug) = self.reduce(col);
        aug.push(ctx.one());
        self.inserted += 1;
        let row = match vec.iter().position(|a| !ctx.is_zero(a)) {
            None => return Inserted::Spanned(aug),
            Some(r) => r,
        };
        // Normalize so the pivot entry is one; reduction then skips a division.
        let inv = ctx.inv(&vec[row]);
        for a in vec.iter_mut() {
            *a = ctx.mul(a, &inv);
        }
        for a in aug.iter_mut() {
            *a = ctx.mul(a, &inv);
        }
        self.pivots.push(Pivot { row, vec, aug });
        Inserted::Pivot
    }
}

pub(crate) fn rank_of_columns<C: FieldCtx + Clone>(ctx: &C, cols: &[&Vec<C::Elem>]) -> usize {
    let mut elim = Eliminator::new(ctx.clone());
    for col in cols {
        elim.insert(col);
    }
    elim.rank()
}

/// Outcome of a circuit test, with an explicit witness either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircuitCheck {
    /// The set is a circuit; the certificate is the kernel combination over
    /// the sorted elements, normalized so the least element has coefficient 1.
    Circuit { certificate: Vec<Scalar> },
    Independent,
    /// A dependent proper subset, so the set is dependent but not minimal.
    ProperSubsetDependent { subset: Vec<usize> },
}

impl CircuitCheck {
    pub fn is_circuit(&self) -> bool {
        matches!(self, CircuitCheck::Circuit { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitList {
    /// Each circuit sorted ascending; the list ordered by (size, lexicographic).
    pub circuits: Vec<Vec<usize>>,
    pub truncated: bool,
}

#[derive(Debug, Clone)]
enum Inner {
    Prime { ctx: PrimeCtx, cols: Vec<Vec<u32>> },
    Rational { cols: Vec<Vec<BigRational>> },
}

/// A matroid represented by labeled columns of an exact matrix. Immutable
/// after construction; the greedy basis is cached on first use.
#[derive(Debug)]
pub struct LinearMatroid {
    labels: Vec<String>,
    nrows: usize,
    inner: Inner,
    basis_cache: OnceLock<Vec<usize>>,
}

impl Clone for LinearMatroid {
    fn clone(&self) -> Self {
        LinearMatroid {
            labels: self.labels.clone(),
            nrows: self.nrows,
            inner: self.inner.clone(),
            basis_cache: match self.basis_cache.get() {
                Some(b) => {
                    let lock = OnceLock::new();
                    let _ = lock.set(b.clone());
                    lock
                }
                None => OnceLock::new(),
            },
        }
    }
}

/// Read-only generic access to the column data; lets search code run
/// monomorphized over either field.
pub(crate) trait MatroidView {
    type Out;
    fn view<C: FieldCtx + Clone>(self, ctx: &C, nrows: usize, cols: &[Vec<C::Elem>]) -> Self::Out;
}

macro_rules! dispatch {
    ($m:expr, |$ctx:ident, $cols:ident| $body:expr) => {
        match &$m.inner {
            Inner::Prime { ctx, cols } => {
                let $ctx = ctx;
                let $cols = cols;
                $body
            }
            Inner::Rational { cols } => {
                let $ctx = &RationalCtx;
                let $cols = cols;
                $body
            }
        }
    };
}

impl LinearMatroid {
    /// Builds a matroid from scalar columns. Labels default to e0, e1, ...
    pub fn from_columns(
        field: FieldSpec,
        labels: Option<Vec<String>>,
        columns: &[Vec<Scalar>],
    ) -> Result<LinearMatroid, MatroidError> {
        let nrows = columns.first().map_or(0, |c| c.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != nrows {
                return Err(MatroidError::InconsistentDimensions {
                    expected: nrows,
                    found: col.len(),
                    column: j,
                });
            }
            for s in col {
                if s.spec() != field {
                    return Err(ArithError::MixedFields(field, s.spec()).into());
                }
            }
        }
        let labels = labels.unwrap_or_else(|| default_labels(columns.len()));
        assert_eq!(labels.len(), columns.len(), "one label per column");
        let inner = match field {
            FieldSpec::Prime(p) => {
                let ctx = PrimeCtx { p };
                let cols = columns
                    .iter()
                    .map(|col| col.iter().map(|s| ctx.from_scalar(s).expect("checked")).collect())
                    .collect();
                Inner::Prime { ctx, cols }
            }
            FieldSpec::Rational => {
                let cols = columns
                    .iter()
                    .map(|col| {
                        col.iter()
                            .map(|s| RationalCtx.from_scalar(s).expect("checked"))
                            .collect()
                    })
                    .collect();
                Inner::Rational { cols }
            }
        };
        Ok(LinearMatroid { labels, nrows, inner, basis_cache: OnceLock::new() })
    }

    /// Fast path for prime-field columns already in residue form.
    pub(crate) fn from_prime_columns(
        p: u32,
        labels: Option<Vec<String>>,
        cols: Vec<Vec<u32>>,
    ) -> LinearMatroid {
        let nrows = cols.first().map_or(0, |c| c.len());
        debug_assert!(cols.iter().all(|c| c.len() == nrows));
        let labels = labels.unwrap_or_else(|| default_labels(cols.len()));
        LinearMatroid {
            labels,
            nrows,
            inner: Inner::Prime { ctx: PrimeCtx { p }, cols },
            basis_cache: OnceLock::new(),
        }
    }

    /// The matroid of a boundary matrix: elements are the top-dimension faces,
    /// independence is acyclicity of the supported subfamily.
    pub fn from_boundary(bm: &BoundaryMatrix) -> LinearMatroid {
        let labels = bm.col_faces.iter().map(|s| s.to_string()).collect();
        LinearMatroid::from_columns(bm.field, Some(labels), &bm.columns)
            .expect("boundary columns share one field and length")
    }

    pub fn from_complex(
        k: &SimplicialComplex,
        d: usize,
        field: FieldSpec,
    ) -> Result<LinearMatroid, MatroidError> {
        Ok(LinearMatroid::from_boundary(&boundary_matrix(k, d, field)?))
    }

    pub fn n_elements(&self) -> usize {
        self.labels.len()
    }

    pub fn n_rows(&self) -> usize {
        self.nrows
    }

    pub fn field(&self) -> FieldSpec {
        match &self.inner {
            Inner::Prime { ctx, .. } => FieldSpec::Prime(ctx.p),
            Inner::Rational { .. } => FieldSpec::Rational,
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn column(&self, e: usize) -> Vec<Scalar> {
        dispatch!(self, |ctx, cols| cols[e].iter().map(|v| ctx.to_scalar(v)).collect())
    }

    pub(crate) fn with_view<V: MatroidView>(&self, v: V) -> V::Out {
        dispatch!(self, |ctx, cols| v.view(ctx, self.nrows, cols))
    }

    fn check_elements(&self, elems: &[usize]) -> Result<Vec<usize>, MatroidError> {
        let n = self.n_elements();
        let mut sorted: Vec<usize> = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&e| e >= n) {
            return Err(MatroidError::ElementOutOfRange { index: bad, n });
        }
        Ok(sorted)
    }

    /// Greedy lowest-index basis, computed once.
    pub fn basis(&self) -> &[usize] {
        self.basis_cache.get_or_init(|| {
            dispatch!(self, |ctx, cols| {
                let mut elim = Eliminator::new(ctx.clone());
                let mut basis = Vec::new();
                for (e, col) in cols.iter().enumerate() {
                    if matches!(elim.insert(col), Inserted::Pivot) {
                        basis.push(e);
                    }
                }
                basis
            })
        })
    }

    pub fn rank(&self) -> usize {
        self.basis().len()
    }

    pub fn rank_of(&self, elems: &[usize]) -> Result<usize, MatroidError> {
        let elems = self.check_elements(elems)?;
        if elems.len() == self.n_elements() {
            return Ok(self.rank());
        }
        Ok(dispatch!(self, |ctx, cols| {
            let selected: Vec<&Vec<_>> = elems.iter().map(|&e| &cols[e]).collect();
            rank_of_columns(ctx, &selected)
        }))
    }

    pub fn is_independent(&self, elems: &[usize]) -> Result<bool, MatroidError> {
        let elems = self.check_elements(elems)?;
        Ok(self.rank_of(&elems)? == elems.len())
    }

    /// All elements spanned by the given set, including the set itself.
    pub fn closure_of(&self, elems: &[usize]) -> Result<Vec<usize>, MatroidError> {
        let elems = self.check_elements(elems)?;
        Ok(dispatch!(self, |ctx, cols| {
            let mut elim = Eliminator::new(ctx.clone());
            for &e in &elems {
                elim.insert(&cols[e]);
            }
            let mut out = Vec::new();
            for (e, col) in cols.iter().enumerate() {
                if elems.binary_search(&e).is_ok() || elim.spans(col) {
                    out.push(e);
                }
            }
            out
        }))
    }

    /// Elements whose column is zero.
    pub fn loops(&self) -> Vec<usize> {
        dispatch!(self, |ctx, cols| {
            cols.iter()
                .enumerate()
                .filter(|(_, col)| col.iter().all(|v| ctx.is_zero(v)))
                .map(|(e, _)| e)
                .collect()
        })
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// The unique circuit inside `base + {e}` for an independent `base`
    /// spanning `e`. Sorted ascending; always contains `e`.
    pub fn fundamental_circuit(
        &self,
        base: &[usize],
        e: usize,
    ) -> Result<Vec<usize>, MatroidError> {
        let base = self.check_elements(base)?;
        if e >= self.n_elements() {
            return Err(MatroidError::ElementOutOfRange { index: e, n: self.n_elements() });
        }
        if base.binary_search(&e).is_ok() {
            return Err(MatroidError::NotIndependent);
        }
        dispatch!(self, |ctx, cols| {
            let mut elim = Eliminator::new(ctx.clone());
            for &b in &base {
                if !matches!(elim.insert(&cols[b]), Inserted::Pivot) {
                    return Err(MatroidError::NotIndependent);
                }
            }
            match elim.insert(&cols[e]) {
                Inserted::Pivot => Err(MatroidError::NotInSpan { element: e }),
                Inserted::Spanned(aug) => {
                    let mut circuit: Vec<usize> = base
                        .iter()
                        .zip(&aug)
                        .filter(|(_, c)| !ctx.is_zero(c))
                        .map(|(&b, _)| b)
                        .collect();
                    circuit.push(e);
                    circuit.sort_unstable();
                    Ok(circuit)
                }
            }
        })
    }

    /// Tests minimal dependence and returns a witness either way: the kernel
    /// combination for a circuit, or a dependent proper subset.
    pub fn is_circuit(&self, elems: &[usize]) -> Result<CircuitCheck, MatroidError> {
        let elems = self.check_elements(elems)?;
        if elems.is_empty() {
            return Ok(CircuitCheck::Independent);
        }
        dispatch!(self, |ctx, cols| {
            let mut elim = Eliminator::new(ctx.clone());
            for (i, &e) in elems.iter().enumerate() {
                if let Inserted::Spanned(aug) = elim.insert(&cols[e]) {
                    let support: Vec<usize> = elems
                        .iter()
                        .zip(&aug)
                        .filter(|(_, c)| !ctx.is_zero(c))
                        .map(|(&f, _)| f)
                        .collect();
                    if i + 1 == elems.len() && support.len() == elems.len() {
                        // Dependency appears only at the last element and uses
                        // every element: minimal by fundamental-circuit uniqueness.
                        let lead_inv = ctx.inv(&aug[0]);
                        let certificate =
                            aug.iter().map(|c| ctx.to_scalar(&ctx.mul(c, &lead_inv))).collect();
                        return Ok(CircuitCheck::Circuit { certificate });
                    }
                    return Ok(CircuitCheck::ProperSubsetDependent { subset: support });
                }
            }
            Ok(CircuitCheck::Independent)
        })
    }

    /// All circuits, optionally capped by size and count. Exponential; refuses
    /// ground sets above `EXHAUSTIVE_LIMIT` unless forced.
    pub fn enumerate_circuits(
        &self,
        size_cap: Option<usize>,
        count_cap: Option<usize>,
        force: bool,
    ) -> Result<CircuitList, MatroidError> {
        let n = self.n_elements();
        if n > EXHAUSTIVE_LIMIT && !force {
            return Err(MatroidError::GroundSetTooLarge { n, limit: EXHAUSTIVE_LIMIT });
        }
        let size_cap = size_cap.unwrap_or(n + 1);
        let mut circuits: Vec<Vec<usize>> = self
            .loops()
            .into_iter()
            .filter(|_| size_cap >= 1)
            .map(|e| vec![e])
            .collect();
        dispatch!(self, |ctx, cols| {
            // DFS over independent sets in ascending element order. Each
            // circuit C appears exactly once, at I = C minus its largest
            // element, when that element's dependency uses all of I.
            struct Dfs<'a, C: FieldCtx> {
                ctx: &'a C,
                cols: &'a [Vec<C::Elem>],
                n: usize,
                size_cap: usize,
                out: &'a mut Vec<Vec<usize>>,
            }
            impl<C: FieldCtx + Clone> Dfs<'_, C> {
                fn run(&mut self, elim: &Eliminator<C>, chosen: &mut Vec<usize>, next: usize) {
                    for e in next..self.n {
                        if self.cols[e].iter().all(|v| self.ctx.is_zero(v)) {
                            continue; // loops handled separately
                        }
                        let mut child = elim.clone();
                        match child.insert(&self.cols[e]) {
                            Inserted::Spanned(aug) => {
                                if chosen.len() + 1 <= self.size_cap
                                    && aug[..chosen.len()].iter().all(|c| !self.ctx.is_zero(c))
                                {
                                    let mut circuit = chosen.clone();
                                    circuit.push(e);
                                    self.out.push(circuit);
                                }
                            }
                            Inserted::Pivot => {
                                if chosen.len() + 2 <= self.size_cap {
                                    chosen.push(e);
                                    self.run(&child, chosen, e + 1);
                                    chosen.pop();
                                }
                            }
                        }
                    }
                }
            }
            let mut dfs =
                Dfs { ctx, cols, n, size_cap, out: &mut circuits };
            let elim = Eliminator::new(ctx.clone());
            dfs.run(&elim, &mut Vec::new(), 0);
        });
        circuits.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let truncated = count_cap.is_some_and(|cap| circuits.len() > cap);
        if let Some(cap) = count_cap {
            circuits.truncate(cap);
        }
        Ok(CircuitList { circuits, truncated })
    }

    /// Deletes and contracts disjoint element sets. Contraction re-expresses
    /// rows so the contracted columns become pivots (scanned in ascending
    /// element order, each taking its lowest nonzero row), then surviving
    /// columns drop the pivot rows. Elements spanned by the contracted set
    /// become loops, removed when `drop_loops` is set.
    pub fn minor(
        &self,
        delete: &[usize],
        contract: &[usize],
        drop_loops: bool,
    ) -> Result<LinearMatroid, MatroidError> {
        let delete = self.check_elements(delete)?;
        let contract = self.check_elements(contract)?;
        if delete.iter().any(|e| contract.binary_search(e).is_ok()) {
            return Err(MatroidError::OverlappingSets);
        }
        let survivors: Vec<usize> = (0..self.n_elements())
            .filter(|e| delete.binary_search(e).is_err() && contract.binary_search(e).is_err())
            .collect();
        Ok(dispatch!(self, |ctx, cols| {
            let mut elim = Eliminator::new(ctx.clone());
            for &e in &contract {
                elim.insert(&cols[e]);
            }
            let pivot_rows: BTreeSet<usize> = elim.pivots.iter().map(|p| p.row).collect();
            let nrows = self.nrows - pivot_rows.len();
            let mut labels = Vec::new();
            let mut new_cols = Vec::new();
            for &e in &survivors {
                let (reduced, _) = elim.reduce(&cols[e]);
                let projected: Vec<_> = reduced
                    .into_iter()
                    .enumerate()
                    .filter(|(r, _)| !pivot_rows.contains(r))
                    .map(|(_, v)| v)
                    .collect();
                if drop_loops && projected.iter().all(|v| ctx.is_zero(v)) {
                    continue;
                }
                labels.push(self.labels[e].clone());
                new_cols.push(projected);
            }
            rebuild(ctx, nrows, labels, new_cols)
        }))
    }

    /// Connected components: the partition generated by circuits. Computed
    /// from the fundamental circuits of one fixed basis; loops are singletons.
    /// Components are sorted by least element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n_elements();
        let mut uf = UnionFind::new(n);
        let basis: Vec<usize> = self.basis().to_vec();
        let loops: BTreeSet<usize> = self.loops().into_iter().collect();
        for e in 0..n {
            if loops.contains(&e) || basis.binary_search(&e).is_ok() {
                continue;
            }
            let circuit = self
                .fundamental_circuit(&basis, e)
                .expect("non-basis, non-loop element is spanned by the basis");
            for w in circuit.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in 0..n {
            groups[uf.find(e)].push(e);
        }
        groups.retain(|g| !g.is_empty());
        groups.sort_by_key(|g| g[0]);
        groups
    }

    /// Oracle form of `components`: joins every pair that shares a circuit.
    /// Exhaustive; meant for small cross-checks.
    pub fn components_bruteforce(&self, force: bool) -> Result<Vec<Vec<usize>>, MatroidError> {
        let list = self.enumerate_circuits(None, None, force)?;
        let n = self.n_elements();
        let mut uf = UnionFind::new(n);
        for circuit in &list.circuits {
            for w in circuit.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in 0..n {
            groups[uf.find(e)].push(e);
        }
        groups.retain(|g| !g.is_empty());
        groups.sort_by_key(|g| g[0]);
        Ok(groups)
    }

    /// Serializes the matrix file format; `parse_matrix_text` inverts this.
    pub fn to_matrix_text(&self) -> String {
        let mut out = String::new();
        match self.field() {
            FieldSpec::Prime(p) => out.push_str(&format!("field {p}\n")),
            FieldSpec::Rational => out.push_str("field rational\n"),
        }
        out.push_str(&format!("rows {} cols {}\n", self.nrows, self.n_elements()));
        for r in 0..self.nrows {
            let row: Vec<String> =
                (0..self.n_elements()).map(|e| self.column(e)[r].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out.push_str("labels ");
        out.push_str(&self.labels.join(" "));
        out.push('\n');
        out
    }

    pub fn parse_matrix_text(text: &str) -> Result<LinearMatroid, MatroidError> {
        let err = |line: usize, reason: &str| MatroidError::Parse {
            line,
            reason: reason.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, raw)| {
                let body = match raw.split_once('#') {
                    Some((head, _)) => head,
                    None => raw,
                };
                (i + 1, body.trim())
            })
            .filter(|(_, l)| !l.is_empty());
        let (fline, field_decl) = lines.next().ok_or_else(|| err(1, "missing field line"))?;
        let field = match field_decl.strip_prefix("field") {
            Some(rest) => FieldSpec::parse(rest.trim()).map_err(|e| err(fline, &e.to_string()))?,
            None => return Err(err(fline, "expected \"field <p|rational>\"")),
        };
        let (sline, shape) = lines.next().ok_or_else(|| err(fline, "missing rows/cols line"))?;
        let toks: Vec<&str> = shape.split_whitespace().collect();
        let (nrows, ncols) = match toks.as_slice() {
            ["rows", r, "cols", c] => (
                r.parse::<usize>().map_err(|_| err(sline, "bad row count"))?,
                c.parse::<usize>().map_err(|_| err(sline, "bad column count"))?,
            ),
            _ => return Err(err(sline, "expected \"rows <r> cols <n>\"")),
        };
        let mut columns: Vec<Vec<Scalar>> = vec![Vec::with_capacity(nrows); ncols];
        for _ in 0..nrows {
            let (rline, row) = lines.next().ok_or_else(|| err(sline, "missing matrix row"))?;
            let entries: Vec<&str> = row.split_whitespace().collect();
            if entries.len() != ncols {
                return Err(err(rline, &format!("expected {ncols} entries, found {}", entries.len())));
            }
            for (j, tok) in entries.iter().enumerate() {
                let s = Scalar::parse(field, tok).map_err(|e| err(rline, &e.to_string()))?;
                columns[j].push(s);
            }
        }
        let mut labels = None;
        if let Some((lline, rest)) = lines.next() {
            let rest = rest
                .strip_prefix("labels")
                .ok_or_else(|| err(lline, "unexpected trailing content"))?;
            let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if names.len() != ncols {
                return Err(err(lline, &format!("expected {ncols} labels, found {}", names.len())));
            }
            labels = Some(names);
        }
        let mut m = LinearMatroid::from_columns(field, labels, &columns)?;
        m.nrows = nrows;
        Ok(m)
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// Reassembles a matroid from generic columns, keeping an explicit row count
/// so empty ground sets still remember their ambient dimension.
fn rebuild<C: FieldCtx>(
    ctx: &C,
    nrows: usize,
    labels: Vec<String>,
    cols: Vec<Vec<C::Elem>>,
) -> LinearMatroid {
    let columns: Vec<Vec<Scalar>> = cols
        .iter()
        .map(|col| col.iter().map(|v| ctx.to_scalar(v)).collect())
        .collect();
    let mut m = LinearMatroid::from_columns(ctx.spec(), Some(labels), &columns)
        .expect("rebuild preserves field and shape");
    m.nrows = nrows;
    m
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Attach the larger root under the smaller so roots stay minimal.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
