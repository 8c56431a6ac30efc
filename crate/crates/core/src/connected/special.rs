use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, Graph};

fn violated(msg: &str) -> Error {
    Error::PreconditionViolated(msg.to_string())
}

/// Five vertices inducing K4 with one subdivided edge and joined to the rest
/// of the graph by a single edge. In a cubic graph this is exactly a 5-set
/// spanning 7 edges.
pub fn is_pendant_subdivided_k4(g: &Graph, set: &[usize]) -> bool {
    set.len() == 5 && g.edges().iter().filter(|(u, v)| set.contains(u) && set.contains(v)).count() == 7
}

/// Lexicographically first 5-set matching [`is_pendant_subdivided_k4`].
pub fn find_pendant_subdivided_k4(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut set = Vec::with_capacity(5);
    fn rec(g: &Graph, start: usize, n: usize, set: &mut Vec<usize>) -> bool {
        if set.len() == 5 {
            return is_pendant_subdivided_k4(g, set);
        }
        for v in start..n {
            set.push(v);
            if rec(g, v + 1, n, set) {
                return true;
            }
            set.pop();
        }
        false
    }
    rec(g, 0, n, &mut set).then_some(set)
}

/// A (3,4,3,4) subgraph of a connected cubic graph on 14 vertices that
/// contains a pendant subdivided K4.
pub fn special_14_construction(g: &Graph) -> Result<EdgeSubset> {
    check_host(g)?;
    let set = find_pendant_subdivided_k4(g).ok_or_else(|| violated("no pendant subdivided K4"))?;
    special_14_from(g, &set)
}

fn check_host(g: &Graph) -> Result<()> {
    if !g.is_regular(3) {
        return Err(Error::NotRegular(3));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.order() != 14 {
        return Err(violated("order is not 14"));
    }
    Ok(())
}

/// Colors the subdivided K4 `zero` minus one edge at its degree-2 vertex `v`,
/// the edges `uv` and `u u1` where `u` is v's outside neighbor, and two edges
/// at a vertex `w` away from `zero`, `u` and `u1`.
pub(crate) fn special_14_from(g: &Graph, zero: &[usize]) -> Result<EdgeSubset> {
    check_host(g)?;
    if !is_pendant_subdivided_k4(g, zero) {
        return Err(violated("V0 does not induce a pendant subdivided K4"));
    }
    let inside = |x: &usize| zero.contains(x);
    let v = *zero
        .iter()
        .find(|&&x| g.neighbors(x).iter().filter(|y| inside(y)).count() == 2)
        .ok_or_else(|| violated("no degree-2 vertex in the subdivided K4"))?;
    let u = *g.neighbors(v).iter().find(|y| !inside(y)).unwrap();
    let others: Vec<usize> = g.neighbors(u).iter().copied().filter(|&x| x != v).collect();

    for &u1 in &others {
        let w = (0..g.order()).find(|&w| {
            !inside(&w) && w != u && w != u1 && !g.neighbors(w).iter().any(|y| inside(y) || *y == u || *y == u1)
        });
        let Some(w) = w else { continue };

        let mut s = EdgeSubset::empty(g.edge_count());
        let drop = g.incident(v).iter().zip(g.neighbors(v)).find(|(_, y)| inside(y)).map(|(&e, _)| e).unwrap();
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if inside(&a) && inside(&b) && e != drop {
                s.insert(e);
            }
        }
        s.insert(g.edge_index(u, v).unwrap());
        s.insert(g.edge_index(u, u1).unwrap());
        for &e in &g.incident(w)[..2] {
            s.insert(e);
        }
        return Ok(s);
    }
    Err(violated("no vertex w away from V0, u and u1"))
}
