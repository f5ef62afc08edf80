//! Oracles shared by the integration tests. None of them go through the
//! library's own analysis code.

#![allow(dead_code)]

use regmap::fpgroup::{Letter, Word};
use regmap::mapcore::RegularMap;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

pub type Perm = Vec<usize>;

/// `a` then `b`, as maps acting on the right: `x (ab) = (x a) b`.
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&x| b[x]).collect()
}

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn invert(a: &Perm) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

/// Value of `w` with generator `i` sent to `images[i]`.
pub fn eval_perm(w: &Word, images: &[Perm]) -> Perm {
    let n = images[0].len();
    w.letters().iter().fold(identity(n), |acc, l| {
        let g = &images[l.generator];
        if l.inverse {
            compose(&acc, &invert(g))
        } else {
            compose(&acc, g)
        }
    })
}

pub fn perm_order(a: &Perm) -> usize {
    let id = identity(a.len());
    let mut x = a.clone();
    let mut k = 1;
    while x != id {
        x = compose(&x, a);
        k += 1;
    }
    k
}

/// All elements of the group generated by `gens`.
pub fn closure(gens: &[Perm]) -> Vec<Perm> {
    let n = gens[0].len();
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut out = vec![identity(n)];
    seen.insert(identity(n));
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y = compose(&out[i], g);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// First pair `(R, S)` of orders `p` and `q` in `group` satisfying every
/// relator and generating the whole group.
pub fn find_generating_pair(group: &[Perm], p: usize, q: usize, relators: &[Word]) -> Option<(Perm, Perm)> {
    let of_order = |k: usize| group.iter().filter(move |g| perm_order(g) == k);
    let rs: Vec<&Perm> = of_order(p).collect();
    let ss: Vec<&Perm> = of_order(q).collect();
    for &r in &rs {
        for &s in &ss {
            let images = [r.clone(), s.clone()];
            if relators.iter().all(|w| eval_perm(w, &images) == identity(r.len()))
                && closure(&images).len() == group.len()
            {
                return Some((r.clone(), s.clone()));
            }
        }
    }
    None
}

/// `Z_n³/⟨(1,1,1)⟩ ⋊ Sym₃` acting affinely on `Z_n³/⟨(1,1,1)⟩`, order `6n²`.
pub fn fermat_group(n: usize) -> Vec<Perm> {
    let key = |x: [usize; 3]| -> usize {
        let y = [(x[0] + n - x[2]) % n, (x[1] + n - x[2]) % n];
        y[0] * n + y[1]
    };
    let points: Vec<[usize; 3]> = (0..n * n).map(|i| [i / n, i % n, 0]).collect();
    let affine = |t: [usize; 3], sigma: [usize; 3]| -> Perm {
        points
            .iter()
            .map(|x| {
                let mut y = [0; 3];
                for i in 0..3 {
                    y[sigma[i]] = (x[i] + t[sigma[i]]) % n;
                }
                key(y)
            })
            .collect()
    };
    let gens = vec![
        affine([1, 0, 0], [0, 1, 2]),
        affine([0, 0, 0], [1, 2, 0]),
        affine([0, 0, 0], [1, 0, 2]),
    ];
    closure(&gens)
}

/// `PSL(2,7)` acting on the projective line over `F_7`; point 7 is infinity.
pub fn psl27() -> Vec<Perm> {
    let inv = |x: usize| (1..7).find(|y| x * y % 7 == 1).unwrap();
    let shift: Perm = (0..8).map(|x| if x == 7 { 7 } else { (x + 1) % 7 }).collect();
    let flip: Perm = (0..8)
        .map(|x| match x {
            7 => 0,
            0 => 7,
            _ => (7 - inv(x)) % 7,
        })
        .collect();
    closure(&[shift, flip])
}

/// Even permutations of four points.
pub fn alt4() -> Vec<Perm> {
    closure(&[vec![1, 2, 0, 3], vec![0, 2, 3, 1]])
}

pub fn letter(g: usize) -> Word {
    Word::from_letters([Letter::new(g, false)])
}

/// Vertex and adjacency data computed from group multiplication alone:
/// the vertex of dart `g` is its coset `g⟨S⟩`, and the edge at `g` leads to
/// the vertex of `gRS`.
pub struct Skeleton {
    pub vertex_of: Vec<usize>,
    pub neighbors: Vec<BTreeSet<usize>>,
    pub loops: bool,
    pub multi: bool,
}

pub fn skeleton_oracle(m: &RegularMap) -> Skeleton {
    let t = m.table();
    let n = m.order();
    let mut vertex_of = vec![usize::MAX; n];
    let mut count = 0;
    for g in 0..n {
        if vertex_of[g] != usize::MAX {
            continue;
        }
        let mut x = g;
        loop {
            vertex_of[x] = count;
            x = t.mul(x, m.s());
            if x == g {
                break;
            }
        }
        count += 1;
    }
    let mut neighbors = vec![BTreeSet::new(); count];
    let mut multiplicity: HashMap<(usize, usize), usize> = HashMap::new();
    let mut loops = false;
    for g in 0..n {
        let (a, b) = (vertex_of[g], vertex_of[t.mul(g, m.rs())]);
        if a == b {
            loops = true;
        } else {
            neighbors[a].insert(b);
        }
        *multiplicity.entry((a, b)).or_default() += 1;
    }
    let multi = multiplicity.values().any(|&c| c > 1);
    Skeleton {
        vertex_of,
        neighbors,
        loops,
        multi,
    }
}

pub fn bfs(neighbors: &[BTreeSet<usize>], v: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; neighbors.len()];
    dist[v] = Some(0);
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for &y in &neighbors[x] {
            if dist[y].is_none() {
                dist[y] = Some(dist[x].unwrap() + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Builds the map `R ↦ R⁻¹, S ↦ S⁻¹` along a spanning tree of the Cayley
/// graph and checks it on every edge.
pub fn inverting_homomorphism_exists(m: &RegularMap) -> bool {
    let t = m.table();
    let n = m.order();
    let images = [t.inverse(m.r()), t.inverse(m.s())];
    let mut phi = vec![usize::MAX; n];
    phi[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(e) = queue.pop_front() {
        for (g, &img) in [m.r(), m.s()].iter().zip(&images) {
            let next = t.mul(e, *g);
            let value = t.mul(phi[e], img);
            if phi[next] == usize::MAX {
                phi[next] = value;
                queue.push_back(next);
            } else if phi[next] != value {
                return false;
            }
        }
    }
    true
}

/// `S_w` acting on vertex `v`, through group multiplication only.
pub fn rotate(m: &RegularMap, w: usize, k: usize, v: usize) -> usize {
    let t = m.table();
    let sw = t.conjugate(m.vertex_dart(w), m.s());
    m.cells().vertex_of(t.mul(t.pow(sw, k as i64), m.vertex_dart(v)))
}

pub fn oracle_diagonal(m: &RegularMap, v: usize) -> BTreeSet<usize> {
    m.skeleton()
        .distinct_neighbors(v)
        .into_iter()
        .filter(|&w| w != v)
        .map(|w| rotate(m, w, 2, v))
        .collect()
}

pub fn oracle_classes(m: &RegularMap) -> BTreeSet<BTreeSet<usize>> {
    let n = m.vertex_count();
    let mut out = BTreeSet::new();
    let mut done = vec![false; n];
    for v in 0..n {
        if done[v] {
            continue;
        }
        let mut class = BTreeSet::from([v]);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for y in oracle_diagonal(m, x) {
                if class.insert(y) {
                    stack.push(y);
                }
            }
        }
        for &x in &class {
            done[x] = true;
        }
        out.insert(class);
    }
    out
}
