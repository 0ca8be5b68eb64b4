use std::collections::BTreeMap;

use super::{permutation_matrix, FamilyInstance, MValue};
use crate::error::{Error, Result};
use crate::grothendieck::FusionData;
use crate::modcat::ModuleActionData;
use crate::scalar::{CycNum, Field};
use crate::spectrum::dimension_eigenspace;

/// A finite group given by its multiplication table `mult[g][h] = gh`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub names: Vec<String>,
    pub mult: Vec<Vec<usize>>,
    pub identity: usize,
}

impl FiniteGroup {
    pub fn new(names: Vec<String>, mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 || mult.len() != n || mult.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::BadParameters("multiplication table must be a square table of element indices".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mult[e][g] == g && mult[g][e] == g))
            .ok_or_else(|| Error::BadParameters("table has no identity".into()))?;
        for g in 0..n {
            if !(0..n).any(|h| mult[g][h] == identity) {
                return Err(Error::BadParameters(format!("{} has no inverse", names[g])));
            }
            for h in 0..n {
                for k in 0..n {
                    if mult[mult[g][h]][k] != mult[g][mult[h][k]] {
                        return Err(Error::BadParameters(format!(
                            "table is not associative at ({}, {}, {})",
                            names[g], names[h], names[k]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, mult, identity })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.mult[g][h] == self.identity).expect("validated group")
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Exponent: least `e` with `g^e = 1` for all `g`.
    pub fn exponent(&self) -> usize {
        let order_of = |g: usize| {
            let (mut x, mut k) = (g, 1);
            while x != self.identity {
                x = self.mult[x][g];
                k += 1;
            }
            k
        };
        (0..self.order()).map(order_of).fold(1, |a, b| num_integer::Integer::lcm(&a, &b))
    }
}

/// `Zn` (cyclic, elements `0..n`), `S3` (permutations of three letters) or
/// `Z2xZ2`.
pub fn group_preset(name: &str) -> Result<FiniteGroup> {
    if let Some(n) = name.strip_prefix('Z').and_then(|r| r.parse::<usize>().ok()) {
        if n == 0 {
            return Err(Error::BadParameters("cyclic group of order 0".into()));
        }
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        return FiniteGroup::new((0..n).map(|a| a.to_string()).collect(), mult);
    }
    match name {
        "S3" => {
            let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
            let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
            // (gh)(x) = g(h(x))
            let compose = |g: &[usize; 3], h: &[usize; 3]| [g[h[0]], g[h[1]], g[h[2]]];
            let mult = perms
                .iter()
                .map(|g| perms.iter().map(|h| perms.iter().position(|p| *p == compose(g, h)).unwrap()).collect())
                .collect();
            FiniteGroup::new(names.iter().map(|s| s.to_string()).collect(), mult)
        }
        "Z2xZ2" => {
            let names = ["00", "01", "10", "11"];
            let mult = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
            FiniteGroup::new(names.iter().map(|s| s.to_string()).collect(), mult)
        }
        _ => Err(Error::BadParameters(format!("unknown group preset '{name}'"))),
    }
}

/// `Vec_G` with dims `κ(g)` acting on `G/H` (trivial cocycles). Matched
/// exactly when `κ|_H = 1`, with `m_{xH} = κ(x)`.
pub fn vecg_family(group: &FiniteGroup, kappa: &[CycNum], subgroup: &[usize]) -> Result<FamilyInstance> {
    let n = group.order();
    if kappa.len() != n {
        return Err(Error::BadParameters(format!("{} kappa values for a group of order {n}", kappa.len())));
    }
    let field = kappa[0].field().clone();
    for a in 0..n {
        for b in 0..n {
            if kappa[a].mul(&kappa[b]) != kappa[group.mult[a][b]] {
                return Err(Error::NotACharacter { a, b });
            }
        }
    }
    let mut h: Vec<usize> = subgroup.to_vec();
    h.sort_unstable();
    h.dedup();
    if h.iter().any(|&x| x >= n) {
        return Err(Error::NotASubgroup("element index out of range".into()));
    }
    if !h.contains(&group.identity) {
        return Err(Error::NotASubgroup("does not contain the identity".into()));
    }
    for &a in &h {
        for &b in &h {
            if !h.contains(&group.mult[a][b]) {
                return Err(Error::NotASubgroup(format!(
                    "{} {} = {} leaves the subset",
                    group.names[a], group.names[b], group.names[group.mult[a][b]]
                )));
            }
        }
    }

    // Left cosets xH, each represented by its least element index.
    let coset_of = |x: usize| h.iter().map(|&k| group.mult[x][k]).min().unwrap();
    let mut reps: Vec<usize> = (0..n).map(coset_of).collect();
    reps.sort_unstable();
    reps.dedup();
    let coset_index = |x: usize| reps.iter().position(|&r| r == coset_of(x)).unwrap();
    let coset_labels = reps
        .iter()
        .map(|&r| {
            let mut members: Vec<usize> = h.iter().map(|&k| group.mult[r][k]).collect();
            members.sort_unstable();
            let names: Vec<&str> = members.iter().map(|&g| group.names[g].as_str()).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();

    let mut constants = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            constants.insert((a, b, group.mult[a][b]), 1);
        }
    }
    let dual = (0..n).map(|g| group.inverse(g)).collect();
    let fusion = FusionData::new(group.names.clone(), group.identity, dual, constants, None, Some(kappa.to_vec()))?;
    let action = (0..n)
        .map(|g| permutation_matrix(&reps.iter().map(|&r| coset_index(group.mult[g][r])).collect::<Vec<_>>()))
        .collect();
    let module = ModuleActionData::new(coset_labels, action)?;

    let trivial_on_h = h.iter().all(|&k| kappa[k].is_one());
    let m = if trivial_on_h {
        MValue::Exact(reps.iter().map(|&r| kappa[r].clone()).collect())
    } else {
        let evidence = match dimension_eigenspace(&fusion, &module, &field) {
            Err(e) => e.to_string(),
            Ok((_, k)) => format!("unexpected eigenspace of dimension {k}"),
        };
        MValue::Unmatched(format!("kappa is nontrivial on the subgroup: {evidence}"))
    };
    let hn: Vec<&str> = h.iter().map(|&k| group.names[k].as_str()).collect();
    Ok(FamilyInstance { name: format!("vecg |G|={n} H={{{}}}", hn.join(",")), field, fusion, module, m })
}
