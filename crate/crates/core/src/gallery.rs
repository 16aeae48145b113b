//! Ready-made example spaces used in tests, docs, and experiments.
//!
//! All constructors return rational-mode spaces with exact entries; call
//! [`CostSpace::with_mode`] to switch the comparison mode.

use crate::space::CostSpace;
use crate::value::{ExtCost, NumericMode, Value};

fn grid_labels(n: usize, denom: usize) -> Vec<String> {
    (0..n).map(|k| Value::ratio(k as i64, denom as i64).to_string()).collect()
}

/// `n` evenly spaced points of the one-way unit interval:
/// `c(s,t) = t - s` for `s <= t`, INF otherwise.
pub fn interval_space(n: usize) -> CostSpace {
    assert!(n >= 2);
    let step = n - 1;
    let mut cost = vec![vec![ExtCost::Infinity; n]; n];
    for (i, row) in cost.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            if i <= j {
                *entry = ExtCost::Finite(Value::ratio((j - i) as i64, step as i64));
            }
        }
    }
    CostSpace::new(grid_labels(n, step), cost, NumericMode::Rational).unwrap()
}

/// `n` evenly spaced points of the one-way unit circle:
/// `c(s,t) = (t - s) mod 1`, so travel is always counterclockwise.
pub fn circle_space(n: usize) -> CostSpace {
    assert!(n >= 3);
    let mut cost = vec![vec![ExtCost::zero(); n]; n];
    for (i, row) in cost.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let steps = (n + j - i) % n;
            *entry = ExtCost::Finite(Value::ratio(steps as i64, n as i64));
        }
    }
    CostSpace::new(grid_labels(n, n), cost, NumericMode::Rational).unwrap()
}

/// `n` evenly spaced points of the interval where moving right costs the
/// distance and moving left costs twice the distance:
/// `c(p,q) = q - p` for `p <= q`, `2(p - q)` for `p >= q`.
pub fn two_speed_interval(n: usize) -> CostSpace {
    assert!(n >= 2);
    let step = n - 1;
    let mut cost = vec![vec![ExtCost::zero(); n]; n];
    for (i, row) in cost.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let v = if i <= j {
                Value::ratio((j - i) as i64, step as i64)
            } else {
                Value::ratio(2 * (i - j) as i64, step as i64)
            };
            *entry = ExtCost::Finite(v);
        }
    }
    CostSpace::new(grid_labels(n, step), cost, NumericMode::Rational).unwrap()
}

/// Edge weights of the four-point digraph `p1 -> p2 -> p3 -> p4` with a
/// direct shortcut `p1 -> p4`: forward edges cost 1, going against any
/// arrow costs 10, and non-edges are INF. Feed this to the min-plus path
/// closure to obtain [`chain_with_shortcut`].
pub fn chain_with_shortcut_weights() -> CostSpace {
    let labels: Vec<String> = (1..=4).map(|i| format!("p{i}")).collect();
    let inf = ExtCost::Infinity;
    let w = |n: i64| ExtCost::from_int(n);
    let cost = vec![
        vec![w(0), w(1), inf.clone(), w(1)],
        vec![w(10), w(0), w(1), inf.clone()],
        vec![inf.clone(), w(10), w(0), w(1)],
        vec![w(10), inf, w(10), w(0)],
    ];
    CostSpace::new(labels, cost, NumericMode::Rational).unwrap()
}

/// The path-closed space of [`chain_with_shortcut_weights`]: the chain
/// `(p1,p2,p3,p4)` is tight at every consecutive triple, yet the direct
/// edge `p1 -> p4` costs 1, so the chain is not a swiftest connection.
pub fn chain_with_shortcut() -> CostSpace {
    let labels: Vec<String> = (1..=4).map(|i| format!("p{i}")).collect();
    let w = |n: i64| ExtCost::from_int(n);
    let cost = vec![
        vec![w(0), w(1), w(2), w(1)],
        vec![w(10), w(0), w(1), w(2)],
        vec![w(11), w(10), w(0), w(1)],
        vec![w(10), w(11), w(10), w(0)],
    ];
    CostSpace::new(labels, cost, NumericMode::Rational).unwrap()
}

/// Three leaves `a, b, c` pairwise at cost 2 plus a hub `t` at cost 1
/// to and from every leaf. The hub is the unique median of `(a, b, c)`.
pub fn tripod_space() -> CostSpace {
    let labels = vec!["a".into(), "b".into(), "c".into(), "t".into()];
    let mut cost = vec![vec![ExtCost::from_int(2); 4]; 4];
    for i in 0..4 {
        cost[i][i] = ExtCost::zero();
        cost[i][3] = if i == 3 { ExtCost::zero() } else { ExtCost::from_int(1) };
        cost[3][i] = if i == 3 { ExtCost::zero() } else { ExtCost::from_int(1) };
    }
    CostSpace::new(labels, cost, NumericMode::Rational).unwrap()
}

/// All off-diagonal costs equal to 1.
pub fn uniform_space(n: usize) -> CostSpace {
    assert!(n >= 1);
    let labels: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
    let mut cost = vec![vec![ExtCost::from_int(1); n]; n];
    for (i, row) in cost.iter_mut().enumerate() {
        row[i] = ExtCost::zero();
    }
    CostSpace::new(labels, cost, NumericMode::Rational).unwrap()
}

/// A weighted directed cycle on `n` points: each forward step costs
/// `forward`, each backward step costs `backward`, and `c(i,j)` is the
/// cheaper of the two ways around.
pub fn directed_cycle_space(n: usize, forward: &Value, backward: &Value) -> CostSpace {
    assert!(n >= 3);
    let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut cost = vec![vec![ExtCost::zero(); n]; n];
    for (i, row) in cost.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            if i != j {
                let fwd_steps = Value::from_int(((n + j - i) % n) as i64);
                let back_steps = Value::from_int(((n + i - j) % n) as i64);
                *entry = ExtCost::Finite((&fwd_steps * forward).min(&back_steps * backward));
            }
        }
    }
    CostSpace::new(labels, cost, NumericMode::Rational).unwrap()
}
