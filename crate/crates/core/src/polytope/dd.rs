//! Vertex enumeration by double description.
//!
//! Start from the unit cube and cut by one row at a time. Each vertex carries
//! the set of rows tight at it. Two vertices on opposite sides of the new row
//! are adjacent iff no third vertex is tight on every row they share; the new
//! vertex is where that edge crosses the row.

use fixedbitset::FixedBitSet;
use num::{Signed, Zero};

use super::{rational, ConstraintKind, ConstraintSystem, Rational};

struct Vertex {
    point: Vec<Rational>,
    tight: FixedBitSet,
}

/// All vertices of the polytope, sorted. The system must contain both bounds
/// for every coordinate; those rows are taken as the starting cube.
pub fn enumerate_vertices(system: &ConstraintSystem) -> Vec<Vec<Rational>> {
    let n = system.n;
    assert!(n <= 20, "the starting cube has 2^n vertices");
    let rows = &system.rows;
    let (bounds, cuts): (Vec<usize>, Vec<usize>) = (0..rows.len()).partition(|&r| {
        matches!(
            rows[r].kind,
            ConstraintKind::LowerBound { .. } | ConstraintKind::UpperBound { .. }
        )
    });
    let mut lower = vec![None; n];
    let mut upper = vec![None; n];
    for &r in &bounds {
        match rows[r].kind {
            ConstraintKind::LowerBound { vertex } => lower[vertex] = Some(r),
            ConstraintKind::UpperBound { vertex } => upper[vertex] = Some(r),
            _ => unreachable!(),
        }
    }
    let lower: Vec<usize> = lower.into_iter().map(|r| r.expect("missing lower bound")).collect();
    let upper: Vec<usize> = upper.into_iter().map(|r| r.expect("missing upper bound")).collect();

    let mut verts: Vec<Vertex> = (0u64..1 << n)
        .map(|bits| {
            let mut tight = FixedBitSet::with_capacity(rows.len());
            let point = (0..n)
                .map(|v| {
                    let on = bits >> v & 1 == 1;
                    tight.insert(if on { upper[v] } else { lower[v] });
                    rational(on as i64)
                })
                .collect();
            Vertex { point, tight }
        })
        .collect();

    for &r in &cuts {
        let row = &rows[r];
        let slack: Vec<Rational> = verts.iter().map(|v| row.slack(&v.point)).collect();
        let plus: Vec<usize> = (0..verts.len()).filter(|&i| slack[i].is_positive()).collect();
        if plus.is_empty() {
            for (v, s) in verts.iter_mut().zip(&slack) {
                if s.is_zero() {
                    v.tight.insert(r);
                }
            }
            continue;
        }
        let minus: Vec<usize> = (0..verts.len()).filter(|&i| slack[i].is_negative()).collect();
        let mut fresh = Vec::new();
        for &p in &plus {
            for &q in &minus {
                let mut common = verts[p].tight.clone();
                common.intersect_with(&verts[q].tight);
                if common.count_ones(..) + 1 < n {
                    continue;
                }
                let adjacent = (0..verts.len())
                    .all(|o| o == p || o == q || !common.is_subset(&verts[o].tight));
                if !adjacent {
                    continue;
                }
                let t = &slack[p] / (&slack[p] - &slack[q]);
                let point = verts[p]
                    .point
                    .iter()
                    .zip(&verts[q].point)
                    .map(|(a, b)| a + &t * (b - a))
                    .collect();
                common.insert(r);
                fresh.push(Vertex { point, tight: common });
            }
        }
        let mut kept: Vec<Vertex> = verts
            .into_iter()
            .zip(&slack)
            .filter(|(_, s)| !s.is_positive())
            .map(|(mut v, s)| {
                if s.is_zero() {
                    v.tight.insert(r);
                }
                v
            })
            .collect();
        kept.extend(fresh);
        verts = kept;
    }
    let mut out: Vec<Vec<Rational>> = verts.into_iter().map(|v| v.point).collect();
    out.sort();
    out.dedup();
    out
}
