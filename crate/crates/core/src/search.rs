//! Backtracking over object-indexed families of morphisms.

use crate::category::Mor;
use crate::error::Result;
use crate::limits::Budget;

/// Enumerates families `(a_0, .., a_{n-1})` with `a_i` drawn from `candidates[i]`
/// in order. `consistent(partial, i)` is called right after slot `i` is filled and
/// must check every constraint among the filled slots that involves `i`.
/// Returns up to `limit` families in lexicographic order.
pub fn families<C>(candidates: &[Vec<Mor>], limit: usize, budget: &mut Budget, consistent: C) -> Result<Vec<Vec<Mor>>>
where
    C: FnMut(&[Option<Mor>], usize) -> bool,
{
    let mut state = State { candidates, assign: vec![None; candidates.len()], consistent, found: Vec::new(), limit };
    if limit > 0 {
        state.go(0, budget)?;
    }
    Ok(state.found)
}

/// The lexicographically first family, if any.
pub fn first_family<C>(candidates: &[Vec<Mor>], budget: &mut Budget, consistent: C) -> Result<Option<Vec<Mor>>>
where
    C: FnMut(&[Option<Mor>], usize) -> bool,
{
    Ok(families(candidates, 1, budget, consistent)?.pop())
}

struct State<'a, C> {
    candidates: &'a [Vec<Mor>],
    assign: Vec<Option<Mor>>,
    consistent: C,
    found: Vec<Vec<Mor>>,
    limit: usize,
}

impl<C> State<'_, C>
where
    C: FnMut(&[Option<Mor>], usize) -> bool,
{
    fn go(&mut self, i: usize, budget: &mut Budget) -> Result<bool> {
        if i == self.candidates.len() {
            self.found.push(self.assign.iter().map(|a| a.expect("complete")).collect());
            return Ok(self.found.len() >= self.limit);
        }
        for &c in &self.candidates[i] {
            budget.tick()?;
            self.assign[i] = Some(c);
            if (self.consistent)(&self.assign, i) && self.go(i + 1, budget)? {
                return Ok(true);
            }
        }
        self.assign[i] = None;
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let cands = vec![vec![Mor(0), Mor(1)], vec![Mor(2), Mor(3)]];
        let all = families(&cands, usize::MAX, &mut Budget::new(100), |_, _| true).unwrap();
        assert_eq!(all.len(), 4);
        assert_eq!(all[0], vec![Mor(0), Mor(2)]);
        assert_eq!(all[3], vec![Mor(1), Mor(3)]);
        let none =
            first_family(&cands, &mut Budget::new(100), |a, i| i == 0 || a[0] != Some(Mor(0)) && a[1] == Some(Mor(9)))
                .unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let cands = vec![vec![Mor(0), Mor(1)]; 20];
        let r = families(&cands, usize::MAX, &mut Budget::new(50), |_, _| true);
        assert!(r.unwrap_err().is_budget());
    }
}
