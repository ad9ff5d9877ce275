//! Canonical forms of point multisets under `GL(k, 2)`.
//!
//! Nodes individualise support points one at a time and refine colours
//! between points and hyperplanes. A node whose colouring is discrete is a
//! leaf: its colour order picks a basis from the support and the image is
//! the multiset of points written in that basis, as a sorted list of
//! `(coordinates, multiplicity)`. The
//! canonical form is the least image among the leaves reached, where leaves
//! are ordered by their node-invariant path first. Automorphisms found
//! along the way prune equivalent subtrees.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gf2::{coordinate_maps, coordinates, reduce, reduced_basis, walsh_hadamard_wrapping};

/// Largest dimension handled by the canonical search.
pub const CANON_MAX_DIM: usize = 16;
/// Upper bound on leaves visited before giving up.
pub const CANON_MAX_LEAVES: usize = 5_000_000;

#[inline]
fn mix(mut x: u64) -> u64 {
    // splitmix64 finaliser
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Result of a canonical search.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub k: usize,
    /// `(coordinates, multiplicity)` ascending by coordinates.
    pub image: Vec<(u64, u32)>,
    /// The basis (in input coordinates) realising `image`.
    pub basis: Vec<u64>,
    /// Automorphism generators found, as permutations of the support
    /// indices (input order).
    pub generators: Vec<Vec<usize>>,
    pub leaves: usize,
}

struct Leaf {
    basis: Vec<u64>,
    path: Vec<usize>,
    inv: Vec<u64>,
    image: Vec<(u64, u32)>,
    /// coordinates of every support point at this leaf
    coords: Vec<u64>,
}

struct Search<'a> {
    k: usize,
    pts: &'a [u64],
    mult: &'a [u32],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    leaves: usize,
    // scratch buffers for refinement
    f: Vec<u64>,
    g: Vec<u64>,
}

/// Canonical form of the multiset `(points[i], mult[i])`, which must span
/// `F_2^k` and contain no zero vector or repeated support point.
pub fn canonical_form(k: usize, points: &[u64], mult: &[u32]) -> Result<CanonicalForm> {
    assert_eq!(points.len(), mult.len());
    if k > CANON_MAX_DIM {
        return Err(Error::BudgetExceeded {
            what: format!("canonical form in dimension {k}"),
            limit: CANON_MAX_DIM,
        });
    }
    if k == 0 {
        return Ok(CanonicalForm {
            k,
            image: Vec::new(),
            basis: Vec::new(),
            generators: Vec::new(),
            leaves: 1,
        });
    }
    if reduced_basis(points).len() != k {
        return Err(Error::InvalidParameter("points do not span the ambient space".into()));
    }
    let mut s = Search {
        k,
        pts: points,
        mult,
        first: None,
        best: None,
        generators: Vec::new(),
        leaves: 0,
        f: vec![0; 1 << k],
        g: vec![0; 1 << k],
    };
    let mut prefix = Vec::with_capacity(k);
    let mut inv = Vec::with_capacity(k + 1);
    s.visit(&mut prefix, &mut inv)?;
    let best = s.best.expect("at least one leaf");
    Ok(CanonicalForm {
        k,
        image: best.image,
        basis: best.basis,
        generators: s.generators,
        leaves: s.leaves,
    })
}

impl Search<'_> {
    /// Stable colours of the support points with the prefix individualised.
    fn refine(&mut self, prefix: &[usize]) -> Vec<u64> {
        let n = self.pts.len();
        let mut colour: Vec<u64> = (0..n).map(|i| mix(self.mult[i] as u64)).collect();
        for (pos, &i) in prefix.iter().enumerate() {
            colour[i] = mix(colour[i] ^ ((pos as u64 + 1) << 40));
        }
        let mut classes = count_distinct(&colour);
        for _ in 0..=self.k + 1 {
            if classes == n {
                break;
            }
            self.f.iter_mut().for_each(|x| *x = 0);
            for i in 0..n {
                self.f[self.pts[i] as usize] = mix(colour[i] ^ 0x5555);
            }
            walsh_hadamard_wrapping(&mut self.f);
            for a in 0..self.f.len() {
                self.g[a] = mix(self.f[a] ^ 0xaaaa);
            }
            walsh_hadamard_wrapping(&mut self.g);
            let next: Vec<u64> = (0..n)
                .map(|i| mix(colour[i].wrapping_mul(31) ^ self.g[self.pts[i] as usize]))
                .collect();
            let c = count_distinct(&next);
            colour = next;
            if c == classes {
                break;
            }
            classes = c;
        }
        colour
    }

    fn visit(&mut self, prefix: &mut Vec<usize>, inv: &mut Vec<u64>) -> Result<Option<usize>> {
        let depth = prefix.len();
        let colour = self.refine(prefix);
        let mut sorted = colour.clone();
        sorted.sort_unstable();
        let node_inv = sorted.iter().fold(depth as u64, |h, &c| mix(h ^ c));
        inv.push(node_inv);
        if self.compare_with_best(inv) == Ordering::Greater {
            inv.pop();
            return Ok(None);
        }
        if count_distinct(&colour) == self.pts.len() {
            let r = self.leaf(prefix, inv, &colour);
            inv.pop();
            return r;
        }

        let mut cells: HashMap<u64, Vec<usize>> = HashMap::new();
        for (i, &c) in colour.iter().enumerate() {
            cells.entry(c).or_default().push(i);
        }
        let (_, cell) = cells
            .into_iter()
            .filter(|(_, members)| members.len() > 1)
            .min_by_key(|(c, members)| (members.len(), *c))
            .expect("colouring is not discrete");

        let mut done: Vec<usize> = Vec::new();
        for &c in &cell {
            if !done.is_empty() && self.same_orbit_as_done(prefix, &done, c) {
                continue;
            }
            done.push(c);
            prefix.push(c);
            let r = self.visit(prefix, inv)?;
            prefix.pop();
            if let Some(level) = r {
                if level < depth {
                    inv.pop();
                    return Ok(Some(level));
                }
            }
            if self.compare_with_best(inv) == Ordering::Greater {
                break;
            }
        }
        inv.pop();
        Ok(None)
    }

    /// Compares the invariant path so far with the best leaf's prefix.
    fn compare_with_best(&self, inv: &[u64]) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some(b) => inv.cmp(&b.inv[..inv.len()]),
        }
    }

    fn same_orbit_as_done(&self, prefix: &[usize], done: &[usize], c: usize) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|g| prefix.iter().all(|&i| g[i] == i))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let n = self.pts.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in gens {
            for i in 0..n {
                let (a, b) = (find(&mut parent, i), find(&mut parent, g[i]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let rc = find(&mut parent, c);
        done.iter().any(|&d| find(&mut parent, d) == rc)
    }

    /// A discrete colouring orders the support; the first `k` independent
    /// points in that order form the basis.
    fn leaf(&mut self, prefix: &[usize], inv: &[u64], colour: &[u64]) -> Result<Option<usize>> {
        self.leaves += 1;
        if self.leaves > CANON_MAX_LEAVES {
            return Err(Error::BudgetExceeded {
                what: "canonical search leaves".into(),
                limit: CANON_MAX_LEAVES,
            });
        }
        let mut order: Vec<usize> = (0..self.pts.len()).collect();
        order.sort_unstable_by_key(|&i| colour[i]);
        let mut basis: Vec<u64> = Vec::with_capacity(self.k);
        let mut ech: Vec<u64> = Vec::with_capacity(self.k);
        for &i in &order {
            let r = reduce(&ech, self.pts[i]);
            if r != 0 {
                ech.push(r);
                ech.sort_unstable_by(|a, b| b.cmp(a));
                basis.push(self.pts[i]);
                if basis.len() == self.k {
                    break;
                }
            }
        }
        let maps = coordinate_maps(&basis, self.k).expect("support spans");
        let coords: Vec<u64> = self.pts.iter().map(|&p| coordinates(&maps, p)).collect();
        let mut image: Vec<(u64, u32)> = coords.iter().copied().zip(self.mult.iter().copied()).collect();
        image.sort_unstable();
        let leaf = Leaf {
            basis,
            path: prefix.to_vec(),
            inv: inv.to_vec(),
            image,
            coords,
        };

        if self.first.is_none() {
            self.first = Some(Leaf {
                basis: leaf.basis.clone(),
                path: leaf.path.clone(),
                inv: leaf.inv.clone(),
                image: leaf.image.clone(),
                coords: leaf.coords.clone(),
            });
            self.best = Some(leaf);
            return Ok(None);
        }
        let first = self.first.as_ref().unwrap();
        if leaf.image == first.image {
            let g = automorphism(&first.coords, &leaf.coords);
            let level = common_prefix(&first.path, &leaf.path);
            self.generators.push(g);
            return Ok(Some(level));
        }
        let best = self.best.as_ref().unwrap();
        match (leaf.inv.as_slice(), &leaf.image).cmp(&(best.inv.as_slice(), &best.image)) {
            Ordering::Equal => {
                let g = automorphism(&best.coords, &leaf.coords);
                let level = common_prefix(&best.path, &leaf.path);
                self.generators.push(g);
                Ok(Some(level))
            }
            Ordering::Less => {
                self.best = Some(leaf);
                Ok(None)
            }
            Ordering::Greater => Ok(None),
        }
    }
}

fn count_distinct(v: &[u64]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Permutation `i -> j` with `to[j] == from[i]`.
fn automorphism(from: &[u64], to: &[u64]) -> Vec<usize> {
    let index: HashMap<u64, usize> = to.iter().enumerate().map(|(j, &c)| (c, j)).collect();
    from.iter().map(|c| index[c]).collect()
}
