//! Uniform-grid discrete calculus on a truncated line.
//!
//! Everything downstream (profiles, operators, time stepping, functionals)
//! works on fields sampled on a symmetric uniform mesh `x_j = -L + j h`.
//! Derivatives are 4th-order finite differences (one-sided closures near the
//! boundary), quadrature is trapezoidal. The trapezoid rule is effectively
//! spectrally accurate here because every in-scope integrand decays
//! exponentially; partial (cumulative) integrals are the one place where a
//! genuinely 4th-order rule is needed, provided by [`cumulative_from_right_h4`].

use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Minimum number of nodes for the widest (4th-derivative) stencil closure.
pub const MIN_POINTS: usize = 9;

/// Nodes per side that use shifted (boundary-closure) stencils.
pub const BOUNDARY_NODES: usize = 4;

/// Symmetric uniform mesh on `[-L, L]` with an odd number of nodes, so that
/// `x = 0` is a node and soliton centers land on the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    half_length: f64,
    n_points: usize,
    spacing: f64,
}

impl Grid {
    pub fn new(half_length: f64, n_points: usize) -> Result<Arc<Self>> {
        if !(half_length > 0.0) || !half_length.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "half_length must be positive and finite, got {half_length}"
            )));
        }
        if n_points < MIN_POINTS {
            return Err(Error::GridTooSmall {
                required: MIN_POINTS,
                actual: n_points,
            });
        }
        if n_points % 2 == 0 {
            return Err(Error::InvalidGrid(format!(
                "n_points must be odd so that x = 0 is a node, got {n_points}"
            )));
        }
        let spacing = 2.0 * half_length / (n_points - 1) as f64;
        Ok(Arc::new(Grid {
            half_length,
            n_points,
            spacing,
        }))
    }

    /// Grid with a target spacing; the node count is rounded to the nearest
    /// odd count that keeps `x = 0` on the grid.
    pub fn with_spacing(half_length: f64, spacing: f64) -> Result<Arc<Self>> {
        if !(spacing > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "spacing must be positive, got {spacing}"
            )));
        }
        let mut n = (2.0 * half_length / spacing).round() as usize + 1;
        if n % 2 == 0 {
            n += 1;
        }
        Grid::new(half_length, n)
    }

    pub fn half_length(&self) -> f64 {
        self.half_length
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn point(&self, j: usize) -> f64 {
        debug_assert!(j < self.n_points);
        // Evaluate symmetrically so that x_{n-1-j} = -x_j exactly.
        let half = (self.n_points - 1) / 2;
        if j >= half {
            (j - half) as f64 * self.spacing
        } else {
            -((half - j) as f64 * self.spacing)
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(move |j| self.point(j))
    }

    /// Index of the node nearest to `x`.
    pub fn nearest_index(&self, x: f64) -> usize {
        let raw = (x + self.half_length) / self.spacing;
        raw.round().clamp(0.0, (self.n_points - 1) as f64) as usize
    }
}

pub fn same_grid(a: &Arc<Grid>, b: &Arc<Grid>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// sech^kappa weight used by the localized norms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSpec {
    kappa: f64,
}

impl WeightSpec {
    pub fn new(kappa: f64) -> Result<Self> {
        if !(kappa > 0.0) || !kappa.is_finite() {
            return Err(Error::InvalidWeight(kappa));
        }
        Ok(WeightSpec { kappa })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// rho(x)^kappa with rho = sech, computed in log space so large |x| does
    /// not overflow cosh.
    pub fn eval(&self, x: f64) -> f64 {
        let ax = x.abs();
        (self.kappa * ((2.0f64).ln() - ax - (-2.0 * ax).exp().ln_1p())).exp()
    }
}

/// Sample type of a grid field.
pub trait Scalar:
    Copy
    + PartialEq
    + std::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Mul<f64, Output = Self>
    + Send
    + Sync
    + 'static
{
    const ZERO: Self;
    fn is_finite_scalar(self) -> bool;
}

impl Scalar for f64 {
    const ZERO: Self = 0.0;
    fn is_finite_scalar(self) -> bool {
        self.is_finite()
    }
}

impl Scalar for Complex64 {
    const ZERO: Self = Complex64::new(0.0, 0.0);
    fn is_finite_scalar(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// One sample per grid node.
#[derive(Debug, Clone, PartialEq)]
pub struct Field<T: Scalar> {
    grid: Arc<Grid>,
    data: Vec<T>,
}

pub type RealField = Field<f64>;
pub type ComplexField = Field<Complex64>;

impl<T: Scalar> Field<T> {
    pub fn zeros(grid: &Arc<Grid>) -> Self {
        Field {
            grid: Arc::clone(grid),
            data: vec![T::ZERO; grid.len()],
        }
    }

    pub fn from_fn(grid: &Arc<Grid>, f: impl Fn(f64) -> T) -> Self {
        let data: Vec<T> = grid.points().map(f).collect();
        let out = Field {
            grid: Arc::clone(grid),
            data,
        };
        debug_assert!(out.is_finite(), "field sampled from closure is not finite");
        out
    }

    pub fn from_vec(grid: &Arc<Grid>, data: Vec<T>) -> Result<Self> {
        if data.len() != grid.len() {
            return Err(Error::GridMismatch);
        }
        let out = Field {
            grid: Arc::clone(grid),
            data,
        };
        if !out.is_finite() {
            return Err(Error::NonFiniteField);
        }
        Ok(out)
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn values(&self) -> &[T] {
        &self.data
    }

    pub fn values_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Field {
            grid: Arc::clone(&self.grid),
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        assert!(same_grid(&self.grid, &other.grid), "grid mismatch");
        Field {
            grid: Arc::clone(&self.grid),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: T) -> Self {
        self.map(|v| v * s)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite_scalar())
    }

    /// Derivative of the requested order (1..=4): interior 4th-order central
    /// stencils, shifted stencils of the same formal order at the 4 outermost
    /// nodes on each side.
    pub fn derivative(&self, order: usize) -> Result<Self> {
        let table = StencilTable::get(order, self.grid.spacing())?;
        if self.len() < table.min_points() {
            return Err(Error::GridTooSmall {
                required: table.min_points(),
                actual: self.len(),
            });
        }
        let n = self.len();
        let mut out = vec![T::ZERO; n];
        let half = table.central.len() / 2;
        for (j, slot) in out
            .iter_mut()
            .enumerate()
            .take(n - BOUNDARY_NODES)
            .skip(BOUNDARY_NODES)
        {
            let mut acc = T::ZERO;
            for (k, &w) in table.central.iter().enumerate() {
                acc = acc + self.data[j + k - half] * w;
            }
            *slot = acc;
        }
        let sign = if order % 2 == 1 { -1.0 } else { 1.0 };
        for j in 0..BOUNDARY_NODES {
            let mut acc = T::ZERO;
            for (k, &w) in table.left[j].iter().enumerate() {
                acc = acc + self.data[k] * w;
            }
            out[j] = acc;
            // Mirror closure on the right; odd orders flip sign.
            let mut acc = T::ZERO;
            for (k, &w) in table.left[j].iter().enumerate() {
                acc = acc + self.data[n - 1 - k] * w;
            }
            out[n - 1 - j] = acc * sign;
        }
        Ok(Field {
            grid: Arc::clone(&self.grid),
            data: out,
        })
    }
}

impl ComplexField {
    pub fn re(&self) -> RealField {
        RealField {
            grid: Arc::clone(&self.grid),
            data: self.data.iter().map(|v| v.re).collect(),
        }
    }

    pub fn im(&self) -> RealField {
        RealField {
            grid: Arc::clone(&self.grid),
            data: self.data.iter().map(|v| v.im).collect(),
        }
    }

    pub fn norm_sqr_field(&self) -> RealField {
        RealField {
            grid: Arc::clone(&self.grid),
            data: self.data.iter().map(|v| v.norm_sqr()).collect(),
        }
    }

    pub fn from_re_im(re: &RealField, im: &RealField) -> Self {
        assert!(same_grid(&re.grid, &im.grid), "grid mismatch");
        ComplexField {
            grid: Arc::clone(&re.grid),
            data: re
                .data
                .iter()
                .zip(&im.data)
                .map(|(&a, &b)| Complex64::new(a, b))
                .collect(),
        }
    }
}

impl RealField {
    pub fn into_complex(&self) -> ComplexField {
        ComplexField {
            grid: Arc::clone(&self.grid),
            data: self.data.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }
}

/// Finite-difference weights for derivative `m` at evaluation point `z`,
/// given arbitrary node locations (Fornberg's recurrence).
pub fn fornberg_weights(z: f64, nodes: &[f64], m: usize) -> Vec<f64> {
    let n = nodes.len();
    assert!(n > m, "need more than m+1 nodes");
    let mut c = vec![vec![0.0f64; m + 1]; n];
    let mut c1 = 1.0f64;
    let mut c4 = nodes[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0f64;
        let c5 = c4;
        c4 = nodes[i] - z;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[m]).collect()
}

/// Per-(order, spacing) stencil weights: the central stencil plus the 4 left
/// boundary closures; the right side is mirrored.
struct StencilTable {
    central: Vec<f64>,
    left: [Vec<f64>; BOUNDARY_NODES],
}

impl StencilTable {
    fn get(order: usize, h: f64) -> Result<Self> {
        if !(1..=4).contains(&order) {
            return Err(Error::InvalidDerivativeOrder(order));
        }
        let half = match order {
            1 | 2 => 2,
            3 | 4 => 3,
            _ => unreachable!(),
        };
        let central_nodes: Vec<f64> = (-(half as isize)..=half as isize)
            .map(|k| k as f64 * h)
            .collect();
        let central = fornberg_weights(0.0, &central_nodes, order);
        // One-sided width m+5: formal order 5 at the closures, so the
        // interior stencil governs the observed convergence order.
        let width = (order + 5).max(2 * half + 1);
        let nodes: Vec<f64> = (0..width).map(|k| k as f64 * h).collect();
        let left = std::array::from_fn(|j| fornberg_weights(j as f64 * h, &nodes, order));
        Ok(StencilTable { central, left })
    }

    fn min_points(&self) -> usize {
        self.left[0].len().max(2 * BOUNDARY_NODES + 1)
    }
}

/// Trapezoidal quadrature over the full grid. No tail model: the domain
/// half-length is validated against the integrand decay at configuration
/// time.
pub fn integrate(f: &RealField) -> f64 {
    let h = f.grid().spacing();
    let v = f.values();
    let n = v.len();
    let mut acc = 0.5 * (v[0] + v[n - 1]);
    for &x in &v[1..n - 1] {
        acc += x;
    }
    acc * h
}

/// (integral of rho^kappa f^2)^(1/2) with rho = sech.
pub fn weighted_norm(f: &RealField, w: WeightSpec) -> f64 {
    let data: Vec<f64> = f
        .grid()
        .points()
        .zip(f.values())
        .map(|(x, &v)| w.eval(x) * v * v)
        .collect();
    let fld = RealField {
        grid: Arc::clone(f.grid()),
        data,
    };
    integrate(&fld).max(0.0).sqrt()
}

/// L2 norm by trapezoidal quadrature.
pub fn l2_norm(f: &RealField) -> f64 {
    let sq = f.map(|v| v * v);
    integrate(&sq).max(0.0).sqrt()
}

pub fn l2_norm_complex(f: &ComplexField) -> f64 {
    let sq = f.norm_sqr_field();
    integrate(&sq).max(0.0).sqrt()
}

pub fn linf_norm(f: &RealField) -> f64 {
    f.values().iter().fold(0.0f64, |m, &v| m.max(v.abs()))
}

pub fn linf_norm_complex(f: &ComplexField) -> f64 {
    f.values().iter().fold(0.0f64, |m, &v| m.max(v.norm()))
}

/// max over the grid of rho^kappa |f|.
pub fn linfty_weighted(f: &RealField, w: WeightSpec) -> f64 {
    f.grid()
        .points()
        .zip(f.values())
        .fold(0.0f64, |m, (x, &v)| m.max(w.eval(x) * v.abs()))
}

/// Inner product by trapezoidal quadrature.
pub fn inner_product(f: &RealField, g: &RealField) -> f64 {
    integrate(&f.zip_with(g, |a, b| a * b))
}

/// F(x_j) = trapezoidal sum of f over [x_j, L]; F(L) = 0.
pub fn cumulative_from_right(f: &RealField) -> RealField {
    let h = f.grid().spacing();
    let v = f.values();
    let n = v.len();
    let mut out = vec![0.0f64; n];
    for j in (0..n - 1).rev() {
        out[j] = out[j + 1] + 0.5 * h * (v[j] + v[j + 1]);
    }
    RealField {
        grid: Arc::clone(f.grid()),
        data: out,
    }
}

/// Per-cell 4-point Newton–Cotes (cubic) integrals; shared by the two
/// 4th-order cumulatives so that prefix + suffix telescopes exactly.
fn nc4_cells(f: &RealField) -> Vec<f64> {
    let h = f.grid().spacing();
    let v = f.values();
    let n = v.len();
    debug_assert!(n >= 4);
    let c = h / 24.0;
    let mut cell = vec![0.0f64; n - 1];
    cell[0] = c * (9.0 * v[0] + 19.0 * v[1] - 5.0 * v[2] + v[3]);
    cell[n - 2] = c * (9.0 * v[n - 1] + 19.0 * v[n - 2] - 5.0 * v[n - 3] + v[n - 4]);
    for j in 1..n - 2 {
        cell[j] = c * (-v[j - 1] + 13.0 * v[j] + 13.0 * v[j + 1] - v[j + 2]);
    }
    cell
}

/// 4th-order right-sided cumulative integral. Used where the h^2 error of the
/// plain trapezoidal cumulative would dominate (operator inversion, kernel
/// checks).
pub fn cumulative_from_right_h4(f: &RealField) -> RealField {
    let cell = nc4_cells(f);
    let n = f.len();
    let mut out = vec![0.0f64; n];
    for j in (0..n - 1).rev() {
        out[j] = out[j + 1] + cell[j];
    }
    RealField {
        grid: Arc::clone(f.grid()),
        data: out,
    }
}

/// Left-sided counterpart: G(x_j) = integral of f over [-L, x_j], G(-L) = 0.
pub fn cumulative_from_left_h4(f: &RealField) -> RealField {
    let cell = nc4_cells(f);
    let n = f.len();
    let mut out = vec![0.0f64; n];
    for j in 1..n {
        out[j] = out[j - 1] + cell[j - 1];
    }
    RealField {
        grid: Arc::clone(f.grid()),
        data: out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn grid(l: f64, n: usize) -> Arc<Grid> {
        Grid::new(l, n).unwrap()
    }

    #[test]
    fn grid_symmetric_with_center_node() {
        let g = grid(10.0, 101);
        assert_eq!(g.point(50), 0.0);
        assert_eq!(g.point(0), -10.0);
        assert_eq!(g.point(100), 10.0);
        for j in 0..g.len() {
            assert_eq!(g.point(j), -g.point(g.len() - 1 - j));
        }
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(Grid::new(10.0, 100).is_err());
        assert!(Grid::new(10.0, 5).is_err());
        assert!(Grid::new(-1.0, 11).is_err());
    }

    #[test]
    fn derivative_of_constant_vanishes() {
        let g = grid(10.0, 201);
        let f = RealField::from_fn(&g, |_| 1.0);
        for order in 1..=4 {
            let d = f.derivative(order).unwrap();
            assert!(linf_norm(&d) <= 1e-9, "order {order}: {}", linf_norm(&d));
        }
    }

    #[test]
    fn derivative_tanh_at_origin() {
        let g = grid(10.0, 401); // h = 0.05
        let f = RealField::from_fn(&g, |x| (x / 2.0f64.sqrt()).tanh());
        let d = f.derivative(1).unwrap();
        let mid = (g.len() - 1) / 2;
        assert_abs_diff_eq!(d.values()[mid], 1.0 / 2.0f64.sqrt(), epsilon = 1e-5);
    }

    #[test]
    fn derivative_is_linear() {
        let g = grid(8.0, 257);
        let f = RealField::from_fn(&g, |x| (0.9 * x).sin());
        let h = RealField::from_fn(&g, |x| (-x * x / 7.0).exp());
        let combo = f.scale(2.5).add(&h.scale(-1.25));
        let spacing = g.spacing();
        for order in 1..=4 {
            let lhs = combo.derivative(order).unwrap();
            let rhs = f
                .derivative(order)
                .unwrap()
                .scale(2.5)
                .add(&h.derivative(order).unwrap().scale(-1.25));
            // Exact identity; only rounding noise amplified by 1/h^order.
            let tol = 1e-12 / spacing.powi(order as i32);
            assert!(
                linf_norm(&lhs.sub(&rhs)) <= tol,
                "order {order}: {} vs {tol}",
                linf_norm(&lhs.sub(&rhs))
            );
        }
    }

    /// Richardson refinement on sin(x): halving h must cut the max error by
    /// at least 2^3.5 for each derivative order (4th-order stencils).
    #[test]
    fn derivative_refinement_order() {
        for order in 1..=4usize {
            let mut errs = Vec::new();
            for n in [201usize, 401] {
                let g = grid(10.0, n);
                let f = RealField::from_fn(&g, |x| x.sin());
                let d = f.derivative(order).unwrap();
                let exact = RealField::from_fn(&g, |x| match order {
                    1 => x.cos(),
                    2 => -x.sin(),
                    3 => -x.cos(),
                    _ => x.sin(),
                });
                errs.push(linf_norm(&d.sub(&exact)));
            }
            let observed_order = (errs[0] / errs[1]).log2();
            assert!(
                observed_order >= 3.5,
                "order {order}: errors {errs:?}, observed order {observed_order:.2}"
            );
        }
    }

    #[test]
    fn fundamental_theorem_holds() {
        let g = grid(12.0, 601);
        let f = RealField::from_fn(&g, |x| (0.7 * x).cos() * (-x * x / 30.0).exp());
        let d = f.derivative(1).unwrap();
        let lhs = integrate(&d);
        let v = f.values();
        let rhs = v[v.len() - 1] - v[0];
        assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-7);
    }

    #[test]
    fn integrate_sech_squared() {
        let g = grid(20.0, 2001);
        let f = RealField::from_fn(&g, |x| {
            let s = 1.0 / x.cosh();
            s * s
        });
        assert_abs_diff_eq!(integrate(&f), 2.0, epsilon = 1e-10);
    }

    #[test]
    fn integrate_odd_function_is_zero() {
        let g = grid(15.0, 901);
        let f = RealField::from_fn(&g, |x| x / x.cosh());
        assert!(integrate(&f).abs() <= 1e-13);
    }

    #[test]
    fn quadrature_even_odd_symmetry() {
        let g = grid(10.0, 501);
        let even = RealField::from_fn(&g, |x| (x * x / 9.0).cos() / x.cosh());
        let flipped: Vec<f64> = even.values().iter().rev().copied().collect();
        let even_flip = RealField::from_vec(&g, flipped).unwrap();
        assert_abs_diff_eq!(integrate(&even), integrate(&even_flip), epsilon = 1e-14);
    }

    #[test]
    fn weighted_norm_basics() {
        let g = grid(20.0, 2001);
        let zero = RealField::zeros(&g);
        assert_eq!(weighted_norm(&zero, WeightSpec::new(1.0).unwrap()), 0.0);
        let one = RealField::from_fn(&g, |_| 1.0);
        assert_abs_diff_eq!(
            weighted_norm(&one, WeightSpec::new(2.0).unwrap()),
            2.0f64.sqrt(),
            epsilon = 1e-10
        );
    }

    #[test]
    fn weighted_norm_matches_fine_oracle() {
        let coarse = grid(30.0, 1501);
        let fine = grid(30.0, 6001);
        let w = WeightSpec::new(1.0).unwrap();
        let a = weighted_norm(&RealField::from_fn(&coarse, |x| 1.0 / (x / 2.0).cosh()), w);
        let b = weighted_norm(&RealField::from_fn(&fine, |x| 1.0 / (x / 2.0).cosh()), w);
        assert_abs_diff_eq!(a, b, epsilon = 1e-8);
    }

    #[test]
    fn cumulative_from_right_matches_antiderivative() {
        let g = grid(20.0, 2001); // h = 0.02
        let f = RealField::from_fn(&g, |x| {
            let s = 1.0 / x.cosh();
            s * s
        });
        let cum = cumulative_from_right(&f);
        let exact = RealField::from_fn(&g, |x| 1.0 - x.tanh());
        assert!(linf_norm(&cum.sub(&exact)) <= 1e-4);
        // Telescoping: F(-L) equals the full integral.
        assert_abs_diff_eq!(cum.values()[0], integrate(&f), epsilon = 1e-12);
        assert_eq!(*cum.values().last().unwrap(), 0.0);
    }

    #[test]
    fn cumulative_of_zero_is_zero() {
        let g = grid(5.0, 101);
        let cum = cumulative_from_right(&RealField::zeros(&g));
        assert_eq!(linf_norm(&cum), 0.0);
    }

    #[test]
    fn cumulative_h4_is_fourth_order() {
        let mut errs = Vec::new();
        for n in [1001usize, 2001] {
            let g = grid(20.0, n);
            let f = RealField::from_fn(&g, |x| {
                let s = 1.0 / x.cosh();
                s * s
            });
            let cum = cumulative_from_right_h4(&f);
            let exact = RealField::from_fn(&g, |x| 1.0 - x.tanh());
            errs.push(linf_norm(&cum.sub(&exact)));
        }
        assert!(errs[0] / errs[1] >= 12.0, "errors {errs:?}");
        assert!(errs[1] <= 1e-8);
    }

    #[test]
    fn cumulative_left_right_consistent() {
        let g = grid(10.0, 801);
        let f = RealField::from_fn(&g, |x| (1.3 * x).sin() / (1.0 + x * x));
        let right = cumulative_from_right_h4(&f);
        let left = cumulative_from_left_h4(&f);
        // Prefix + suffix telescopes to the total for every node.
        let total = right.values()[0];
        for j in 0..g.len() {
            assert_abs_diff_eq!(
                left.values()[j] + right.values()[j],
                total,
                epsilon = 1e-13
            );
        }
    }

    #[test]
    fn linfty_weighted_examples() {
        let g = grid(20.0, 2001);
        let zero = RealField::zeros(&g);
        let w = WeightSpec::new(1.0).unwrap();
        assert_eq!(linfty_weighted(&zero, w), 0.0);
        let one = RealField::from_fn(&g, |_| 1.0);
        assert_abs_diff_eq!(linfty_weighted(&one, w), 1.0, epsilon = 1e-14);
        // sup of sech(x) e^{|x|/2}, attained at x = ln(3)/2.
        let f = RealField::from_fn(&g, |x| (x.abs() / 2.0).exp());
        let brute = g
            .points()
            .zip(f.values())
            .fold(0.0f64, |m, (x, &v)| m.max(v / x.cosh()));
        assert_abs_diff_eq!(linfty_weighted(&f, w), brute, epsilon = 1e-13);
        // Grid max sits within h/2 of the true maximizer x = ln(3)/2.
        let analytic = 2.0 / (3.0f64.powf(0.25) + 3.0f64.powf(-0.75));
        assert_abs_diff_eq!(linfty_weighted(&f, w), analytic, epsilon = 1e-4);
    }

    #[test]
    fn complex_field_roundtrip() {
        let g = grid(5.0, 101);
        let f = ComplexField::from_fn(&g, |x| Complex64::new(x.cos(), x.sin()));
        let back = ComplexField::from_re_im(&f.re(), &f.im());
        assert_eq!(f, back);
    }

    #[test]
    fn from_vec_rejects_non_finite() {
        let g = grid(5.0, 101);
        let mut v = vec![0.0; g.len()];
        v[3] = f64::NAN;
        assert!(RealField::from_vec(&g, v).is_err());
    }

    #[test]
    fn weight_eval_no_overflow() {
        let w = WeightSpec::new(0.35).unwrap();
        let v = w.eval(800.0);
        assert!(v > 0.0 && v < 1e-100);
        assert_abs_diff_eq!(w.eval(0.0), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            w.eval(1.3),
            (1.0f64 / 1.3f64.cosh()).powf(0.35),
            epsilon = 1e-14
        );
    }
}
