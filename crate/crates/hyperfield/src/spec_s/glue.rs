use super::{sign_sum, SignError};
use crate::hypercore::{FiniteGroup, HyperTable};

/// `(A × S)/~` with `(α, s) ~ (α, 0)` for `α ∉ B`; `elems[i]` is the
/// representative `(α, s)` of carrier element `i`.
#[derive(Clone, Debug)]
pub struct GluedHypergroup {
    pub table: HyperTable,
    pub elems: Vec<(usize, i8)>,
}

fn tag(s: i8) -> &'static str {
    match s {
        -1 => "-",
        0 => "0",
        _ => "+",
    }
}

/// Glue `A × S` along the complement of the subgroup `B`: sums are the
/// images of the product sums over all representatives.
pub fn glue_build(a: &FiniteGroup, b: &[usize]) -> Result<GluedHypergroup, SignError> {
    if !a.is_subgroup(b) {
        return Err(SignError::NotSubgroup(format!("{b:?}")));
    }
    let n = a.order();
    let in_b: Vec<bool> = (0..n).map(|x| b.contains(&x)).collect();
    let mut elems = Vec::new();
    let mut index = vec![[usize::MAX; 3]; n];
    for (alpha, &full) in in_b.iter().enumerate() {
        let sides: &[i8] = if full { &[-1, 0, 1] } else { &[0] };
        for &s in sides {
            index[alpha][(s + 1) as usize] = elems.len();
            elems.push((alpha, s));
        }
    }
    let eps = |alpha: usize, s: i8| -> usize {
        let s = if in_b[alpha] { s } else { 0 };
        index[alpha][(s + 1) as usize]
    };
    let reps = |i: usize| -> Vec<(usize, i8)> {
        let (alpha, s) = elems[i];
        if in_b[alpha] {
            vec![(alpha, s)]
        } else {
            vec![(alpha, -1), (alpha, 0), (alpha, 1)]
        }
    };
    let labels: Vec<String> = elems.iter().map(|&(alpha, s)| format!("({},{})", a.labels()[alpha], tag(s))).collect();
    let zero = eps(a.identity(), 0);
    let table = HyperTable::from_fns(
        labels,
        zero,
        |x, y| {
            let mut out = Vec::new();
            for (alpha, s) in reps(x) {
                for &(beta, t) in &reps(y) {
                    let gamma = a.op(alpha, beta);
                    for u in sign_sum(s, t) {
                        let z = eps(gamma, u);
                        if !out.contains(&z) {
                            out.push(z);
                        }
                    }
                }
            }
            out
        },
        |x| {
            let (alpha, s) = elems[x];
            eps(a.inv(alpha), -s)
        },
    )?;
    Ok(GluedHypergroup { table, elems })
}
