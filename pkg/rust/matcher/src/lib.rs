//! C ABI around the blossom implementation in the `mwmatching` crate
//! (a port of Van Rantwijk's reference maximum weight matching).

use mwmatching::{Matching, SENTINEL};

/// Maximum weight matching with the max-cardinality option.
///
/// `us`, `vs`, `ws` describe `n_edges` undirected edges over vertices
/// `0..n_vertices`.  On return `mate[i]` holds the partner of vertex `i`,
/// or -1 when `i` is unmatched.  Returns 0 on success, nonzero on bad input.
///
/// # Safety
/// All pointers must reference buffers of the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn mwpm_solve(
    n_vertices: usize,
    n_edges: usize,
    us: *const u32,
    vs: *const u32,
    ws: *const i32,
    mate_out: *mut i64,
) -> i32 {
    if n_vertices == 0 {
        return 0;
    }
    if us.is_null() || vs.is_null() || ws.is_null() || mate_out.is_null() {
        return 1;
    }
    let us = std::slice::from_raw_parts(us, n_edges);
    let vs = std::slice::from_raw_parts(vs, n_edges);
    let ws = std::slice::from_raw_parts(ws, n_edges);
    let mut edges = Vec::with_capacity(n_edges);
    for i in 0..n_edges {
        let (u, v) = (us[i] as usize, vs[i] as usize);
        if u >= n_vertices || v >= n_vertices || u == v {
            return 2;
        }
        edges.push((u, v, ws[i]));
    }
    let mate = Matching::new(edges).max_cardinality().solve();
    let out = std::slice::from_raw_parts_mut(mate_out, n_vertices);
    for i in 0..n_vertices {
        out[i] = match mate.get(i) {
            Some(&m) if m != SENTINEL => m as i64,
            _ => -1,
        };
    }
    0
}
