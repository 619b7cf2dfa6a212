//! Irreducibility, block-triangular normal forms, spectral radius, and
//! eigenvectors of max-plus matrices.
//!
//! A square matrix A induces the digraph with an arc (i, j) whenever
//! a_ij ≠ 𝟘. A is *irreducible* when that digraph is strongly connected
//! (for 1×1 matrices: when the single entry is finite). Every square matrix
//! can be permuted into a lower block-triangular *normal form* whose diagonal
//! blocks are the strongly connected components; the refined form computed
//! here places the blocks with all-𝟘 off-diagonal block rows first, ordered
//! by increasing block eigenvalue, and the remaining blocks in a topological
//! order of the component digraph.
//!
//! The spectral radius is computed by the exact trace formula
//! λ = tr A ⊕ tr^{1/2}(A²) ⊕ ⋯ ⊕ tr^{1/n}(Aⁿ), which for max-plus equals the
//! maximum cycle mean. For an irreducible matrix, λ is the unique eigenvalue
//! and the columns of (λ⁻¹A)^× generate all eigenvectors.

use num::{BigInt, BigRational};

use crate::error::{Error, Result};
use crate::linalg::{mat_mul, scalar_mul, times_operator, trace, Matrix, TropMatrix};
use crate::semifield::{Semifield, TropScalar};

/// Block-triangular normal form of a square max-plus matrix.
///
/// `permuted` is the relabeled matrix: `permuted[perm[i]][perm[j]] = a[i][j]`.
/// The first `r` diagonal blocks have all-𝟘 off-diagonal block rows and are
/// ordered by increasing eigenvalue (ties by smallest original index); every
/// later block row has at least one non-𝟘 block left of the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    /// `perm[original_index] = normal_form_position` (0-based).
    pub perm: Vec<usize>,
    /// Sizes n₁..n_s of the diagonal blocks, in normal-form order.
    pub block_sizes: Vec<usize>,
    /// Number of leading blocks whose off-diagonal block row is all-𝟘.
    pub r: usize,
    /// Eigenvalues λ₁..λ_s of the diagonal blocks, in normal-form order.
    pub block_eigenvalues: Vec<TropScalar>,
    /// The permuted matrix, lower block-triangular.
    pub permuted: TropMatrix,
}

impl NormalForm {
    /// Number of diagonal blocks s.
    #[must_use]
    pub fn block_count(&self) -> usize {
        self.block_sizes.len()
    }

    /// Starting row/column of each diagonal block in `permuted`.
    #[must_use]
    pub fn block_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.block_sizes.len());
        let mut acc = 0;
        for &size in &self.block_sizes {
            offsets.push(acc);
            acc += size;
        }
        offsets
    }

    /// The k-th diagonal block (0-based) of `permuted`.
    ///
    /// # Panics
    ///
    /// Panics if `k` is out of range.
    #[must_use]
    #[track_caller]
    pub fn diagonal_block(&self, k: usize) -> TropMatrix {
        let offset = self.block_offsets()[k];
        let size = self.block_sizes[k];
        self.permuted
            .submatrix(offset, offset + size, offset, offset + size)
    }
}

/// Spectral data of a square matrix: the radius and the per-block
/// eigenvalues of its normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    /// The spectral radius λ = λ₁ ⊕ ⋯ ⊕ λ_s (maximum cycle mean; 𝟘 for an
    /// acyclic digraph).
    pub rho: TropScalar,
    /// The eigenvalue of each diagonal block, in normal-form order.
    pub per_block: Vec<TropScalar>,
}

/// Arc lists of the digraph of `a`: arc (i, j) whenever a_ij ≠ 𝟘.
fn arc_lists(a: &TropMatrix) -> Vec<Vec<usize>> {
    (0..a.rows())
        .map(|i| (0..a.cols()).filter(|&j| !a.get(i, j).is_zero()).collect())
        .collect()
}

/// Strongly connected components by Tarjan's algorithm with an explicit DFS
/// stack (no recursion). Each component's node list is sorted ascending; the
/// component list is returned in reverse topological order of the
/// condensation (components only reached from later ones come first).
fn strongly_connected_components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNVISITED: usize = usize::MAX;
    let n = adj.len();
    let mut discovery = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_discovery = 0usize;
    let mut components: Vec<Vec<usize>> = Vec::new();

    for root in 0..n {
        if discovery[root] != UNVISITED {
            continue;
        }
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        discovery[root] = next_discovery;
        low[root] = next_discovery;
        next_discovery += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if frame.1 < adj[v].len() {
                let w = adj[v][frame.1];
                frame.1 += 1;
                if discovery[w] == UNVISITED {
                    discovery[w] = next_discovery;
                    low[w] = next_discovery;
                    next_discovery += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(discovery[w]);
                }
            } else {
                frames.pop();
                if let Some(parent) = frames.last() {
                    let p = parent.0;
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == discovery[v] {
                    let mut component = Vec::new();
                    loop {
                        let w = stack.pop().expect("Tarjan stack underflow");
                        on_stack[w] = false;
                        component.push(w);
                        if w == v {
                            break;
                        }
                    }
                    component.sort_unstable();
                    components.push(component);
                }
            }
        }
    }
    components
}

/// Whether `a` is irreducible: its digraph is strongly connected, and for
/// n = 1 the single entry is finite (the 1×1 zero matrix counts as
/// reducible, matching the "zero square matrix" blocks of the normal form).
///
/// # Errors
///
/// Fails with [`Error::NotSquare`] on non-square input.
pub fn is_irreducible(a: &TropMatrix) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            op: "is_irreducible",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() == 1 {
        return Ok(!a.get(0, 0).is_zero());
    }
    Ok(strongly_connected_components(&arc_lists(a)).len() == 1)
}

/// The exact trace formula for the spectral radius:
/// λ = ⊕_{m=1..n} pow(tr(Aᵐ), 1/m).
fn trace_formula_radius(a: &TropMatrix) -> Result<TropScalar> {
    let n = a.rows();
    let mut rho = TropScalar::bottom();
    let mut power = a.clone();
    for m in 1..=n {
        let t = trace(&power)?;
        let exponent = BigRational::new(BigInt::from(1), BigInt::from(m as i64));
        // pow(𝟘, 1/m) = 𝟘, so zero traces fold in silently.
        rho = rho.add(&t.pow(&exponent)?);
        if m < n {
            power = mat_mul(&power, a)?;
        }
    }
    Ok(rho)
}

/// Relabels `a` by a permutation: the result `b` satisfies
/// `b[perm[i]][perm[j]] = a[i][j]`.
///
/// # Panics
///
/// Panics if `perm` is not a permutation of `0..a.rows()` or `a` is not
/// square.
#[must_use]
#[track_caller]
pub fn apply_permutation(a: &TropMatrix, perm: &[usize]) -> TropMatrix {
    assert!(a.is_square(), "permutation relabeling needs a square matrix");
    let n = a.rows();
    assert_eq!(perm.len(), n, "permutation length mismatch");
    let mut seen = vec![false; n];
    for &p in perm {
        assert!(p < n && !seen[p], "not a permutation");
        seen[p] = true;
    }
    let mut result = Matrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            result.set(perm[i], perm[j], a.get(i, j).clone());
        }
    }
    result
}

/// The inverse permutation: `inv[perm[i]] = i`.
///
/// # Panics
///
/// Panics if `perm` is not a permutation of `0..perm.len()`.
#[must_use]
#[track_caller]
pub fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let n = perm.len();
    let mut inverse = vec![usize::MAX; n];
    for (i, &p) in perm.iter().enumerate() {
        assert!(p < n && inverse[p] == usize::MAX, "not a permutation");
        inverse[p] = i;
    }
    inverse
}

/// Computes the refined block-triangular normal form of `a`.
///
/// The diagonal blocks are the strongly connected components of the digraph
/// of `a`. Components without arcs into other components form the first `r`
/// blocks, ordered by (eigenvalue ascending, smallest original index); the
/// remaining components follow in a topological order where a component is
/// placed only after every component it has arcs into, ties again by
/// smallest original index. Within a block, original indices stay ascending.
///
/// # Errors
///
/// Fails with [`Error::NotSquare`] on non-square input.
pub fn normal_form(a: &TropMatrix) -> Result<NormalForm> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            op: "normal_form",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let adj = arc_lists(a);
    let components = strongly_connected_components(&adj);
    let component_count = components.len();

    let mut component_of = vec![0usize; n];
    for (c, nodes) in components.iter().enumerate() {
        for &v in nodes {
            component_of[v] = c;
        }
    }

    // Distinct inter-component arcs c → d (arcs of the condensation).
    let mut out_neighbors: Vec<Vec<usize>> = vec![Vec::new(); component_count];
    for (v, targets) in adj.iter().enumerate() {
        let c = component_of[v];
        for &w in targets {
            let d = component_of[w];
            if c != d && !out_neighbors[c].contains(&d) {
                out_neighbors[c].push(d);
            }
        }
    }
    let mut in_neighbors: Vec<Vec<usize>> = vec![Vec::new(); component_count];
    for (c, outs) in out_neighbors.iter().enumerate() {
        for &d in outs {
            in_neighbors[d].push(c);
        }
    }

    let lambda: Vec<TropScalar> = components
        .iter()
        .map(|nodes| trace_formula_radius(&a.principal_submatrix(nodes)))
        .collect::<Result<_>>()?;

    // Blocks 1..r: components with no outgoing condensation arcs, by
    // (eigenvalue, smallest original index).
    let mut leading: Vec<usize> = (0..component_count)
        .filter(|&c| out_neighbors[c].is_empty())
        .collect();
    leading.sort_by(|&c, &d| {
        lambda[c]
            .cmp_order(&lambda[d])
            .then(components[c][0].cmp(&components[d][0]))
    });
    let r = leading.len();

    // Remaining blocks: place a component once all components it points to
    // are placed, smallest original index first.
    let mut placed = vec![false; component_count];
    let mut unplaced_out: Vec<usize> = out_neighbors.iter().map(Vec::len).collect();
    let mut order: Vec<usize> = Vec::with_capacity(component_count);
    for &c in &leading {
        placed[c] = true;
        order.push(c);
    }
    let mut ready: Vec<usize> = Vec::new();
    let refresh_ready = |placed: &[bool], unplaced_out: &[usize], ready: &mut Vec<usize>| {
        for c in 0..component_count {
            if !placed[c] && unplaced_out[c] == 0 && !ready.contains(&c) {
                ready.push(c);
            }
        }
    };
    for &c in &leading {
        for &b in &in_neighbors[c] {
            unplaced_out[b] -= 1;
        }
    }
    refresh_ready(&placed, &unplaced_out, &mut ready);
    while let Some(pos) = ready
        .iter()
        .enumerate()
        .min_by_key(|(_, &c)| components[c][0])
        .map(|(pos, _)| pos)
    {
        let c = ready.swap_remove(pos);
        placed[c] = true;
        order.push(c);
        for &b in &in_neighbors[c] {
            unplaced_out[b] -= 1;
            if !placed[b] && unplaced_out[b] == 0 {
                ready.push(b);
            }
        }
    }
    debug_assert_eq!(order.len(), component_count, "condensation is acyclic");

    let mut perm = vec![0usize; n];
    let mut position = 0usize;
    for &c in &order {
        for &v in &components[c] {
            perm[v] = position;
            position += 1;
        }
    }

    Ok(NormalForm {
        permuted: apply_permutation(a, &perm),
        perm,
        block_sizes: order.iter().map(|&c| components[c].len()).collect(),
        r,
        block_eigenvalues: order.iter().map(|&c| lambda[c].clone()).collect(),
    })
}

/// The spectral radius of `a` (via the exact trace formula) together with
/// the per-block eigenvalues of its normal form. The radius equals the ⊕-sum
/// of the block eigenvalues.
///
/// # Errors
///
/// Fails with [`Error::NotSquare`] on non-square input.
pub fn spectral_radius(a: &TropMatrix) -> Result<Spectrum> {
    let nf = normal_form(a)?;
    Ok(Spectrum {
        rho: trace_formula_radius(a)?,
        per_block: nf.block_eigenvalues,
    })
}

/// The eigenvector generator (λ⁻¹A)^× of an irreducible matrix with
/// eigenvalue λ > 𝟘. Every vector of the form (λ⁻¹A)^× ⊗ u is an
/// eigenvector, and every eigenvector arises that way; in particular each
/// generator column v satisfies A ⊗ v = λ ⊗ v.
///
/// # Errors
///
/// * [`Error::NotSquare`] on non-square input;
/// * [`Error::ReducibleMatrix`] when `a` is reducible;
/// * [`Error::BottomSpectralRadius`] when λ = 𝟘 (only the 1×1 zero matrix,
///   which is already reducible, so this guards future instances).
pub fn eigenvectors(a: &TropMatrix) -> Result<TropMatrix> {
    if !is_irreducible(a)? {
        return Err(Error::ReducibleMatrix);
    }
    let lambda = trace_formula_radius(a)?;
    if lambda.is_zero() {
        return Err(Error::BottomSpectralRadius);
    }
    let scaled = scalar_mul(&lambda.inv()?, a);
    times_operator(&scaled)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;

    fn fin(v: i64) -> TropScalar {
        TropScalar::from_int(v)
    }

    fn bot() -> TropScalar {
        TropScalar::bottom()
    }

    fn example_matrix() -> TropMatrix {
        Matrix::from_rows(vec![
            vec![fin(1), bot(), bot()],
            vec![fin(3), fin(2), bot()],
            vec![bot(), fin(0), fin(-1)],
        ])
    }

    #[test]
    fn example_matrix_is_reducible() {
        assert!(!is_irreducible(&example_matrix()).unwrap());
    }

    #[test]
    fn one_by_one_irreducibility_depends_on_the_entry() {
        let finite = Matrix::from_rows(vec![vec![fin(5)]]);
        assert!(is_irreducible(&finite).unwrap());
        let zero = TropMatrix::zero(1, 1);
        assert!(!is_irreducible(&zero).unwrap());
    }

    #[test]
    fn all_finite_matrix_is_irreducible() {
        let a = Matrix::from_rows(vec![vec![fin(0), fin(2)], vec![fin(-1), fin(3)]]);
        assert!(is_irreducible(&a).unwrap());
    }

    #[test]
    fn non_square_inputs_are_rejected() {
        let a = TropMatrix::zero(2, 3);
        assert!(matches!(is_irreducible(&a), Err(Error::NotSquare { .. })));
        assert!(matches!(normal_form(&a), Err(Error::NotSquare { .. })));
        assert!(matches!(spectral_radius(&a), Err(Error::NotSquare { .. })));
        assert!(matches!(eigenvectors(&a), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn normal_form_of_the_example() {
        let nf = normal_form(&example_matrix()).unwrap();
        assert_eq!(nf.block_count(), 3);
        assert_eq!(nf.r, 1);
        assert_eq!(nf.block_sizes, vec![1, 1, 1]);
        assert_eq!(nf.block_eigenvalues, vec![fin(1), fin(2), fin(-1)]);
        assert_eq!(nf.perm, vec![0, 1, 2]);
        assert_eq!(nf.permuted, example_matrix());
        assert_eq!(nf.block_offsets(), vec![0, 1, 2]);
        assert_eq!(nf.diagonal_block(1), Matrix::from_rows(vec![vec![fin(2)]]));
    }

    #[test]
    fn normal_form_of_an_irreducible_matrix_is_one_block() {
        let a = Matrix::from_rows(vec![vec![fin(0), fin(2)], vec![fin(-1), fin(3)]]);
        let nf = normal_form(&a).unwrap();
        assert_eq!(nf.block_count(), 1);
        assert_eq!(nf.r, 1);
        assert_eq!(nf.perm, vec![0, 1]);
        assert_eq!(nf.permuted, a);
    }

    #[test]
    fn normal_form_of_a_relabeled_copy_recovers_the_structure() {
        // Relabel the example so original node i becomes q[i].
        let q = vec![1usize, 2, 0];
        let relabeled = apply_permutation(&example_matrix(), &q);
        assert_ne!(relabeled, example_matrix());
        let nf = normal_form(&relabeled).unwrap();
        assert_eq!(nf.block_sizes, vec![1, 1, 1]);
        assert_eq!(nf.r, 1);
        assert_eq!(nf.block_eigenvalues, vec![fin(1), fin(2), fin(-1)]);
        assert_eq!(nf.permuted, example_matrix(), "relabeling is undone");
        // Composing the two relabelings is the identity.
        let composed: Vec<usize> = (0..3).map(|i| nf.perm[q[i]]).collect();
        assert_eq!(composed, vec![0, 1, 2]);
    }

    #[test]
    fn normal_form_places_arcless_components_first() {
        // Node 0 points at node 1; node 2 is isolated with a self-loop.
        // Components {1} and {2} have no outgoing arcs (blocks 1..r), and
        // {1} precedes {2} because its eigenvalue 𝟘 is smaller than 1.
        let a = Matrix::from_rows(vec![
            vec![bot(), fin(4), bot()],
            vec![bot(), bot(), bot()],
            vec![bot(), bot(), fin(1)],
        ]);
        let nf = normal_form(&a).unwrap();
        assert_eq!(nf.block_sizes, vec![1, 1, 1]);
        assert_eq!(nf.r, 2);
        assert_eq!(nf.block_eigenvalues, vec![bot(), fin(1), bot()]);
        // Order: node 1 (λ = 𝟘), node 2 (λ = 1), then node 0.
        assert_eq!(nf.perm, vec![2, 0, 1]);
        // The only non-𝟘 off-diagonal entry sits below the diagonal.
        assert_eq!(*nf.permuted.get(2, 0), fin(4));
    }

    #[test]
    fn normal_form_of_the_zero_matrix_is_all_leading_blocks() {
        let z = TropMatrix::zero(3, 3);
        let nf = normal_form(&z).unwrap();
        assert_eq!(nf.block_sizes, vec![1, 1, 1]);
        assert_eq!(nf.r, 3);
        assert_eq!(nf.block_eigenvalues, vec![bot(), bot(), bot()]);
        assert_eq!(nf.perm, vec![0, 1, 2]);
    }

    #[test]
    fn spectral_radius_of_the_example() {
        let spectrum = spectral_radius(&example_matrix()).unwrap();
        assert_eq!(spectrum.rho, fin(2));
        assert_eq!(spectrum.per_block, vec![fin(1), fin(2), fin(-1)]);
        // Direct trace formula: max(2/1, 4/2, 6/3) = 2.
        let folded = spectrum
            .per_block
            .iter()
            .fold(bot(), |acc, v| acc.add(v));
        assert_eq!(spectrum.rho, folded);
    }

    #[test]
    fn spectral_radius_of_the_zero_matrix_is_bottom() {
        let z = TropMatrix::zero(4, 4);
        assert_eq!(spectral_radius(&z).unwrap().rho, bot());
    }

    #[test]
    fn spectral_radius_handles_fractional_cycle_means() {
        // Cycle 0 → 1 → 0 with weight 1 + 0 = 1 over length 2.
        let a = Matrix::from_rows(vec![vec![bot(), fin(1)], vec![fin(0), bot()]]);
        assert_eq!(
            spectral_radius(&a).unwrap().rho,
            TropScalar::ratio(1, 2),
            "the radius is the maximum cycle mean, not an integer here",
        );
    }

    #[test]
    fn eigenvectors_of_a_one_by_one_block() {
        let a = Matrix::from_rows(vec![vec![fin(1)]]);
        let generator = eigenvectors(&a).unwrap();
        assert_eq!(generator, Matrix::from_rows(vec![vec![fin(0)]]));
    }

    #[test]
    fn identity_matrices_have_the_identity_as_unit_eigenvalue_generator() {
        // For n ≥ 2 the identity is reducible (no arcs between distinct
        // nodes), so the irreducible-only entry point rejects it; the
        // underlying generator at λ = 𝟙 is still the identity itself, with
        // every column a fixed point.
        let id = TropMatrix::identity(3);
        assert_eq!(eigenvectors(&id), Err(Error::ReducibleMatrix));
        let generator = times_operator(&id).unwrap();
        assert_eq!(generator, id, "each unit column is a fixed point");
        for v in generator.columns() {
            assert_eq!(id.mul_vector(&v).unwrap(), v);
        }
        let one_by_one = TropMatrix::identity(1);
        assert_eq!(eigenvectors(&one_by_one).unwrap(), one_by_one);
    }

    #[test]
    fn eigenvector_columns_satisfy_the_eigenproblem() {
        let a = Matrix::from_rows(vec![
            vec![fin(0), fin(3), bot()],
            vec![bot(), fin(1), fin(2)],
            vec![fin(4), bot(), fin(-1)],
        ]);
        assert!(is_irreducible(&a).unwrap());
        let lambda = spectral_radius(&a).unwrap().rho;
        let generator = eigenvectors(&a).unwrap();
        for v in generator.columns() {
            let av = a.mul_vector(&v).unwrap();
            assert_eq!(av, v.scale(&lambda), "A·v = λ·v for column {v}");
            assert!(v.is_regular(), "irreducible eigenvectors are regular");
        }
    }

    #[test]
    fn eigenvectors_reject_reducible_and_bottom_radius_inputs() {
        assert_eq!(
            eigenvectors(&example_matrix()),
            Err(Error::ReducibleMatrix)
        );
        assert_eq!(eigenvectors(&TropMatrix::zero(1, 1)), Err(Error::ReducibleMatrix));
    }

    #[test]
    fn permutation_helpers_compose_to_identity() {
        let perm = vec![2usize, 0, 3, 1];
        let inverse = invert_permutation(&perm);
        assert_eq!(inverse, vec![1, 3, 0, 2]);
        let a = Matrix::from_rows(vec![
            vec![fin(1), fin(2), bot(), fin(0)],
            vec![bot(), fin(3), fin(4), bot()],
            vec![fin(5), bot(), fin(6), fin(7)],
            vec![bot(), fin(8), bot(), fin(9)],
        ]);
        let relabeled = apply_permutation(&a, &perm);
        assert_eq!(apply_permutation(&relabeled, &inverse), a);
        assert_eq!(*relabeled.get(perm[0], perm[1]), fin(2));
    }

    #[test]
    fn traces_are_bounded_by_radius_powers() {
        let a = example_matrix();
        let rho = spectral_radius(&a).unwrap().rho;
        let mut power = a.clone();
        let mut rho_power = rho.clone();
        for _ in 0..3 {
            assert!(trace(&power).unwrap().le(&rho_power));
            power = mat_mul(&power, &a).unwrap();
            rho_power = rho_power.mul(&rho);
        }
    }

    #[test]
    fn sccs_group_mutually_reachable_nodes() {
        // 0 ↔ 1 form one component; 2 hangs off it.
        let a = Matrix::from_rows(vec![
            vec![bot(), fin(1), bot()],
            vec![fin(2), bot(), bot()],
            vec![bot(), fin(0), fin(1)],
        ]);
        let components = strongly_connected_components(&arc_lists(&a));
        assert_eq!(components.len(), 2);
        assert!(components.contains(&vec![0, 1]));
        assert!(components.contains(&vec![2]));
        let nf = normal_form(&a).unwrap();
        assert_eq!(nf.block_sizes, vec![2, 1]);
        assert_eq!(nf.r, 1);
        assert_eq!(
            nf.block_eigenvalues,
            vec![TropScalar::ratio(3, 2), fin(1)],
        );
        let _ = Vector::new(vec![fin(0)]);
    }
}
