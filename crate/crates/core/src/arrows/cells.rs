use super::Direction;
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::setcomp::{FiniteSet, Label};
use crate::zie::Cell;

/// `*↓S = {(*S,T), (S,*T), (I,*)}` and `*↑S`, which uses `(*,I)` instead.
///
/// The witness moves the old one off the face: `x_i + δ` on `I` and `-nδ` at
/// `*` for `↓` (signs reversed for `↑`), with `δ` below every nonzero
/// channel sum. The result is checked against the displayed channel set.
pub fn cell_arrow(cell: &Cell, star: &Label, dir: Direction) -> Result<Cell> {
    let ground = cell.ground();
    if ground.contains(star) {
        return Err(Error::LabelCollision(star.clone()));
    }
    let n = ground.len();
    let x = cell.witness_q();
    let mut delta = Q::one();
    for m in 1u64..(1 << n) - 1 {
        let s = (0..n)
            .filter(|k| m >> k & 1 == 1)
            .fold(Q::zero(), |acc, k| &acc + &x[k]);
        let abs = if s.signum() < 0 { -&s } else { s };
        let bound = &abs / &Q::int(2 * n as i64 + 2);
        if bound < delta {
            delta = bound;
        }
    }
    let sign = match dir {
        Direction::Retarded => Q::one(),
        Direction::Advanced => Q::int(-1),
    };
    let shift = &delta * &sign;
    let big = ground.with(star.clone());
    let mut z = Vec::with_capacity(n + 1);
    for l in big.iter() {
        if l == star {
            z.push(&(-&shift) * &Q::int(n as i64));
        } else {
            let k = ground.index_of(l).expect("label of I");
            z.push(&x[k] + &shift);
        }
    }
    let out = Cell::from_point_q(&big, z)?;
    let expected = expected_channels(cell, &FiniteSet::singleton(star.clone()), dir)?;
    if out != expected {
        return Err(Error::NotACell("arrow witness landed in the wrong chamber".into()));
    }
    Ok(out)
}

/// `Y↓S = {(Y1⊔S, Y2⊔T) : (S,T) ∈ S or S = I}` (and `T = I` for `↑`).
fn expected_channels(cell: &Cell, y: &FiniteSet, dir: Direction) -> Result<Cell> {
    let ground = cell.ground();
    let big = ground.disjoint_union(y)?;
    let mut chosen = Vec::new();
    for a in big.subsets() {
        if a.is_empty() || a.len() == big.len() {
            continue;
        }
        let part = a.intersection(ground);
        let keep = if part.is_empty() {
            dir == Direction::Advanced
        } else if part.len() == ground.len() {
            dir == Direction::Retarded
        } else {
            cell.contains(&part)?
        };
        if keep {
            chosen.push(a);
        }
    }
    Cell::from_channels(&big, chosen)
}

/// `Y↓S` or `Y↑S`, one label at a time in canonical order.
pub fn iterated_cell_arrow(cell: &Cell, y: &FiniteSet, dir: Direction) -> Result<Cell> {
    let mut cur = cell.clone();
    for l in y.iter() {
        cur = cell_arrow(&cur, l, dir)?;
    }
    let expected = expected_channels(cell, y, dir)?;
    if cur != expected {
        return Err(Error::NotACell("iterated arrow disagrees with Y-formula".into()));
    }
    Ok(cur)
}
