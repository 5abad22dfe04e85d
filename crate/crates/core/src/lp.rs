//! Exact two-phase simplex over the rationals.
//!
//! Every variable is nonnegative; free variables must be split by the
//! caller. Pivoting follows Bland's rule, so the method terminates without
//! any perturbation. Each solve first runs on `Ratio<i128>` with checked
//! arithmetic and restarts on arbitrary-precision rationals on overflow.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::rational::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
struct Row {
    coeffs: Vec<Q>,
    relation: Relation,
    rhs: Q,
}

/// `maximize c·x  s.t.  rows, x ≥ 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    num_vars: usize,
    rows: Vec<Row>,
    objective: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Q, point: Vec<Q> },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            rows: Vec::new(),
            objective: vec![<Q as Zero>::zero(); num_vars],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Q>, relation: Relation, rhs: Q) {
        assert_eq!(coeffs.len(), self.num_vars, "constraint width");
        self.rows.push(Row {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn maximize(&mut self, objective: Vec<Q>) {
        assert_eq!(objective.len(), self.num_vars, "objective width");
        self.objective = objective;
    }

    pub fn solve(&self) -> LpOutcome {
        match solve_in::<Ratio<i128>>(self) {
            Some(outcome) => outcome,
            None => solve_in::<Q>(self).expect("arbitrary precision cannot overflow"),
        }
    }

    /// Feasibility only; skips phase two.
    pub fn find_feasible(&self) -> Option<Vec<Q>> {
        let mut copy = self.clone();
        copy.objective = vec![<Q as Zero>::zero(); self.num_vars];
        match copy.solve() {
            LpOutcome::Optimal { point, .. } => Some(point),
            LpOutcome::Unbounded => unreachable!("zero objective is bounded"),
            LpOutcome::Infeasible => None,
        }
    }
}

/// Ordered field with fallible arithmetic.
trait Scalar: Clone + Debug + PartialOrd {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn div(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn from_q(q: &Q) -> Option<Self>;
    fn to_q(&self) -> Q;
}

impl Scalar for Ratio<i128> {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(other)
    }
    fn div(&self, other: &Self) -> Option<Self> {
        self.checked_div(other)
    }
    fn neg(&self) -> Option<Self> {
        Some(Ratio::new_raw(self.numer().checked_neg()?, *self.denom()))
    }
    fn from_q(q: &Q) -> Option<Self> {
        Some(Ratio::new(q.numer().to_i128()?, q.denom().to_i128()?))
    }
    fn to_q(&self) -> Q {
        Q::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

impl Scalar for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn div(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn from_q(q: &Q) -> Option<Self> {
        Some(q.clone())
    }
    fn to_q(&self) -> Q {
        self.clone()
    }
}

struct Tableau<T> {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<T>>,
    /// Reduced costs; last entry is minus the objective value.
    cost: Vec<T>,
    basis: Vec<usize>,
    width: usize,
}

enum PivotRun {
    Optimal,
    Unbounded,
}

impl<T: Scalar> Tableau<T> {
    fn rhs(&self) -> usize {
        self.width
    }

    fn pivot(&mut self, row: usize, col: usize) -> Option<()> {
        let rhs = self.rhs();
        let p = self.rows[row][col].clone();
        if p != T::one() {
            for j in 0..=rhs {
                if !self.rows[row][j].is_zero() {
                    self.rows[row][j] = self.rows[row][j].div(&p)?;
                }
            }
        }
        let pivot_row = self.rows[row].clone();
        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let factor = self.rows[i][col].clone();
            eliminate(&mut self.rows[i], &pivot_row, &factor)?;
        }
        if !self.cost[col].is_zero() {
            let factor = self.cost[col].clone();
            eliminate(&mut self.cost, &pivot_row, &factor)?;
        }
        self.basis[row] = col;
        Some(())
    }

    /// Primal simplex on columns `< active`, Bland's rule.
    fn run(&mut self, active: usize) -> Option<PivotRun> {
        let rhs = self.rhs();
        loop {
            let Some(col) = (0..active).find(|&j| self.cost[j].is_positive()) else {
                return Some(PivotRun::Optimal);
            };
            let mut best: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rows[i][rhs].div(a)?;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((row, _)) = best else {
                return Some(PivotRun::Unbounded);
            };
            self.pivot(row, col)?;
        }
    }
}

fn eliminate<T: Scalar>(target: &mut [T], pivot_row: &[T], factor: &T) -> Option<()> {
    for (t, p) in target.iter_mut().zip(pivot_row) {
        if p.is_zero() {
            continue;
        }
        *t = t.sub(&factor.mul(p)?)?;
    }
    Some(())
}

/// `None` signals arithmetic overflow in `T`.
fn solve_in<T: Scalar>(lp: &LinearProgram) -> Option<LpOutcome> {
    let n = lp.num_vars;
    let m = lp.rows.len();

    // Normalize to nonnegative right-hand sides.
    let mut rows: Vec<(Vec<T>, Relation, T)> = Vec::with_capacity(m);
    for row in &lp.rows {
        let mut coeffs: Vec<T> = row.coeffs.iter().map(T::from_q).collect::<Option<_>>()?;
        let mut rhs = T::from_q(&row.rhs)?;
        let mut relation = row.relation;
        if rhs.is_negative() {
            coeffs = coeffs.iter().map(T::neg).collect::<Option<_>>()?;
            rhs = rhs.neg()?;
            relation = match relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        rows.push((coeffs, relation, rhs));
    }

    let num_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let num_art = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let art_start = n + num_slack;
    let width = art_start + num_art;

    let mut tableau = Tableau {
        rows: Vec::with_capacity(m),
        cost: vec![T::zero(); width + 1],
        basis: Vec::with_capacity(m),
        width,
    };
    let (mut slack, mut art) = (n, art_start);
    for (coeffs, relation, rhs) in rows {
        let mut row = vec![T::zero(); width + 1];
        row[..n].clone_from_slice(&coeffs);
        row[width] = rhs;
        match relation {
            Relation::Le => {
                row[slack] = T::one();
                tableau.basis.push(slack);
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = T::one().neg()?;
                slack += 1;
                row[art] = T::one();
                tableau.basis.push(art);
                art += 1;
            }
            Relation::Eq => {
                row[art] = T::one();
                tableau.basis.push(art);
                art += 1;
            }
        }
        tableau.rows.push(row);
    }

    // Phase one: maximize -(sum of artificials).
    if num_art > 0 {
        for i in 0..m {
            if tableau.basis[i] >= art_start {
                for j in 0..=width {
                    if j < art_start || j == width {
                        tableau.cost[j] = tableau.cost[j].add(&tableau.rows[i][j])?;
                    }
                }
            }
        }
        // cost[width] currently holds +sum(rhs) = -(phase-one objective).
        match tableau.run(width)? {
            PivotRun::Optimal => {}
            PivotRun::Unbounded => unreachable!("phase one is bounded"),
        }
        if tableau.cost[width].is_positive() {
            return Some(LpOutcome::Infeasible);
        }
        // Drive remaining (zero-level) artificials out of the basis.
        let mut i = 0;
        while i < tableau.rows.len() {
            if tableau.basis[i] >= art_start {
                match (0..art_start).find(|&j| !tableau.rows[i][j].is_zero()) {
                    Some(col) => tableau.pivot(i, col)?,
                    None => {
                        tableau.rows.remove(i);
                        tableau.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    // Phase two on the original objective, artificial columns frozen.
    let objective: Vec<T> = lp.objective.iter().map(T::from_q).collect::<Option<_>>()?;
    let mut cost = vec![T::zero(); width + 1];
    cost[..n].clone_from_slice(&objective);
    for (i, &b) in tableau.basis.iter().enumerate() {
        if b < n && !objective[b].is_zero() {
            let factor = objective[b].clone();
            eliminate(&mut cost, &tableau.rows[i], &factor)?;
        }
    }
    for c in cost.iter_mut().take(width).skip(art_start) {
        *c = T::zero();
    }
    tableau.cost = cost;
    match tableau.run(art_start)? {
        PivotRun::Unbounded => return Some(LpOutcome::Unbounded),
        PivotRun::Optimal => {}
    }

    let mut point = vec![<Q as Zero>::zero(); n];
    for (i, &b) in tableau.basis.iter().enumerate() {
        if b < n {
            point[b] = tableau.rows[i][width].to_q();
        }
    }
    let value = -tableau.cost[width].to_q();
    Some(LpOutcome::Optimal { value, point })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn textbook_optimum() {
        // max 3x + 5y s.t. x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18  → (2, 6), 36
        let mut lp = LinearProgram::new(2);
        lp.add_constraint(vec![q(1), q(0)], Relation::Le, q(4));
        lp.add_constraint(vec![q(0), q(2)], Relation::Le, q(12));
        lp.add_constraint(vec![q(3), q(2)], Relation::Le, q(18));
        lp.maximize(vec![q(3), q(5)]);
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                value: q(36),
                point: vec![q(2), q(6)]
            }
        );
    }

    #[test]
    fn equality_and_ge_rows() {
        // max x s.t. x + y = 1, y ≥ 1/3
        let mut lp = LinearProgram::new(2);
        lp.add_constraint(vec![q(1), q(1)], Relation::Eq, q(1));
        lp.add_constraint(vec![q(0), q(1)], Relation::Ge, frac(1, 3));
        lp.maximize(vec![q(1), q(0)]);
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, frac(2, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.add_constraint(vec![q(1)], Relation::Ge, q(2));
        lp.add_constraint(vec![q(1)], Relation::Le, q(1));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);

        let mut lp = LinearProgram::new(2);
        lp.add_constraint(vec![q(1), q(-1)], Relation::Le, q(1));
        lp.maximize(vec![q(0), q(1)]);
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn negative_rhs_and_redundant_equalities() {
        // -x - y = -2 twice (redundant), x ≤ 1/2 → max y = 2
        let mut lp = LinearProgram::new(2);
        lp.add_constraint(vec![q(-1), q(-1)], Relation::Eq, q(-2));
        lp.add_constraint(vec![q(-2), q(-2)], Relation::Eq, q(-4));
        lp.add_constraint(vec![q(1), q(0)], Relation::Le, frac(1, 2));
        lp.maximize(vec![q(0), q(1)]);
        match lp.solve() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, q(2));
                assert_eq!(point, vec![q(0), q(2)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn overflow_falls_back_to_big_rationals() {
        let huge = Q::new(BigInt::from(10).pow(40), BigInt::from(3));
        let mut lp = LinearProgram::new(1);
        lp.add_constraint(vec![q(1)], Relation::Le, huge.clone());
        lp.maximize(vec![q(1)]);
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, huge),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example cycles under the textbook largest-coefficient rule.
        let mut lp = LinearProgram::new(4);
        lp.add_constraint(vec![frac(1, 4), q(-60), frac(-1, 25), q(9)], Relation::Le, q(0));
        lp.add_constraint(vec![frac(1, 2), q(-90), frac(-1, 50), q(3)], Relation::Le, q(0));
        lp.add_constraint(vec![q(0), q(0), q(1), q(0)], Relation::Le, q(1));
        lp.maximize(vec![frac(3, 4), q(-150), frac(1, 50), q(-6)]);
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, frac(1, 20)),
            other => panic!("{other:?}"),
        }
    }
}
