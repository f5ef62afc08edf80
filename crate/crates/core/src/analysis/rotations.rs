use crate::mapcore::RegularMap;

/// Powers `S_v^i` (`0 ≤ i < q`) of every vertex rotation.
#[derive(Debug, Clone)]
pub struct VertexRotations<'a> {
    map: &'a RegularMap,
    powers: Vec<Vec<usize>>,
}

impl<'a> VertexRotations<'a> {
    pub fn new(map: &'a RegularMap) -> Self {
        let t = map.table();
        let powers = (0..map.vertex_count())
            .map(|v| {
                let s = map.vertex_rotation(v);
                let mut out = Vec::with_capacity(map.q());
                let mut cur = 0;
                for _ in 0..map.q() {
                    out.push(cur);
                    cur = t.mul(cur, s);
                }
                out
            })
            .collect();
        Self { map, powers }
    }

    pub fn map(&self) -> &'a RegularMap {
        self.map
    }

    pub fn rotation(&self, v: usize) -> usize {
        self.power(v, 1)
    }

    /// `S_v^i`, exponent taken mod `q`.
    pub fn power(&self, v: usize, i: usize) -> usize {
        self.powers[v][i % self.map.q()]
    }

    /// Whether automorphism `e` fixes vertex `x`.
    pub fn fixes(&self, e: usize, x: usize) -> bool {
        self.map.act_on_vertex(e, x) == x
    }

    /// The `i` in `0..q` with `S_v^i = e`, if any.
    pub fn exponent_of(&self, v: usize, e: usize) -> Option<usize> {
        self.powers[v].iter().position(|&x| x == e)
    }
}
