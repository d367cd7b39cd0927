//! Explicit representation constructions: grids, split graphs with a given
//! box representation, block graphs, and the small complete-bipartite
//! fixtures.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::rat::{interior_points, mid, rfrac, rint, Rational};
use crate::representation::{
    intersection_graph, validate_ok, BoxRepresentation, Rect, StabMode, StabbedRepresentation,
};

/// Recursion contract of the block-graph construction: within window
/// `(a, b)` and above floor `h`, the set `S` (a subset of one block) must be
/// accessible — all of `S` on the bottom stab line with minimal left edges
/// among bottom-line vertices.
#[derive(Debug, Clone)]
pub struct AccessibleSpec {
    pub s: BTreeSet<String>,
    pub a: Rational,
    pub b: Rational,
    pub h: Rational,
}

impl AccessibleSpec {
    /// Checks the four contract conditions against a representation whose
    /// bottom stab line is `rep.stabs[0]`.
    pub fn check(&self, rep: &StabbedRepresentation) -> bool {
        let bottom = &rep.stabs[0];
        let mut max_s_left: Option<&Rational> = None;
        for label in &self.s {
            let Some(r) = rep.rects.get(label) else { return false };
            if !r.stabbed_by(bottom) {
                return false;
            }
            if max_s_left.map_or(true, |m| &r.x_lo > m) {
                max_s_left = Some(&r.x_lo);
            }
        }
        for (label, r) in &rep.rects {
            if r.x_lo <= self.a || r.x_hi >= self.b {
                return false;
            }
            let on_bottom = r.stabbed_by(bottom);
            if on_bottom {
                if r.y_hi <= self.h {
                    return false;
                }
                if !self.s.contains(label) {
                    if let Some(m) = max_s_left {
                        if &r.x_lo <= m {
                            return false;
                        }
                    }
                }
            } else if r.y_lo <= self.h {
                return false;
            }
        }
        true
    }
}

/// The `(h, w)` grid graph with vertices labeled `r{i}c{j}`.
pub fn grid_graph(h: usize, w: usize) -> Graph {
    let mut labels = Vec::with_capacity(h * w);
    for i in 1..=h {
        for j in 1..=w {
            labels.push(format!("r{i}c{j}"));
        }
    }
    let mut g = Graph::new(labels);
    let id = |i: usize, j: usize| (i - 1) * w + (j - 1);
    for i in 1..=h {
        for j in 1..=w {
            if j < w {
                g.add_edge(id(i, j), id(i, j + 1));
            }
            if i < h {
                g.add_edge(id(i, j), id(i + 1, j));
            }
        }
    }
    g
}

/// Exactly stabbed representation of the `(h, w)` grid with `min(h, w)` stab
/// lines. Row `i` lives on stab line `i`; vertical adjacency is realized by
/// staggered top/bottom extents so that only same-column rectangles of
/// consecutive rows meet.
pub fn grid_rep(h: usize, w: usize) -> Result<(StabbedRepresentation, Graph)> {
    if h < 1 || w < 1 {
        return Err(Error::ParameterOutOfRange("grid dimensions must be >= 1".into()));
    }
    if h > w {
        // transpose: same graph up to swapping row/column labels
        let (rep, _) = grid_rep(w, h)?;
        let relabeled = rep.relabel(|l| {
            let (r, c) = parse_grid_label(l);
            format!("r{c}c{r}")
        });
        let g = grid_graph(h, w);
        validate_ok(&relabeled, &g, StabMode::Esrig)?;
        return Ok((relabeled, g));
    }
    let g = grid_graph(h, w);
    let gamma = rfrac(1, 2 * h as i64);
    // strictly decreasing d_1 > d_2 > ... in (1/2, 3/4]: column j's upward
    // reach is d_{2j-1} and downward reach is 1 - d_{2j}; the interleaving
    // makes same-column rows touch while diagonal pairs stay separated
    let d = |t: i64| rfrac(1, 2) + rfrac(1, 2 * (t + 1));
    let mut rects = BTreeMap::new();
    for i in 1..=h as i64 {
        for j in 1..=w as i64 {
            let x_lo = rint(j) + &gamma * rint(i);
            let x_hi = rint(j + 1) + &gamma * rint(i) + &gamma / rint(2);
            let up = d(2 * j - 1);
            let down = rint(1) - d(2 * j);
            let y_lo = rint(i) - down;
            let y_hi = rint(i) + up;
            rects.insert(format!("r{i}c{j}"), Rect::new(x_lo, x_hi, y_lo, y_hi));
        }
    }
    let stabs = (1..=h as i64).map(rint).collect();
    let rep = StabbedRepresentation::new(stabs, rects);
    validate_ok(&rep, &g, StabMode::Esrig)?;
    Ok((rep, g))
}

fn parse_grid_label(l: &str) -> (usize, usize) {
    let rest = l.strip_prefix('r').expect("grid label");
    let (r, c) = rest.split_once('c').expect("grid label");
    (r.parse().unwrap(), c.parse().unwrap())
}

/// Turns a split graph plus a rectangle representation of it into a 3-ESRIG
/// representation: clique rectangles keep the middle line, each independent
/// vertex collapses to a point of `A_u = ∩_{v ∈ N[u]} r_v` off the middle
/// axis and is stretched into a degenerate vertical segment reaching the
/// outer line on its side.
pub fn split_to_3esrig(g: &Graph, r: &BoxRepresentation) -> Result<StabbedRepresentation> {
    // the input must be a representation of g
    let gg = intersection_graph(&r.rects);
    if gg.n() != g.n() {
        return Err(Error::VertexSetMismatch(format!(
            "{} rectangles vs {} vertices",
            gg.n(),
            g.n()
        )));
    }
    let to_g: Vec<usize> = (0..gg.n())
        .map(|v| {
            g.index_of_label(gg.label(v)).ok_or_else(|| {
                Error::VertexSetMismatch(format!("rectangle '{}' has no vertex", gg.label(v)))
            })
        })
        .collect::<Result<_>>()?;
    for u in 0..gg.n() {
        for v in u + 1..gg.n() {
            if gg.has_edge(u, v) != g.has_edge(to_g[u], to_g[v]) {
                return Err(Error::InvalidRepresentation {
                    mode: "rectangle".into(),
                    summary: format!("adjacency mismatch at '{}'-'{}'", gg.label(u), gg.label(v)),
                });
            }
        }
    }
    let Some((clique, indep)) = graph::split_partition(g) else {
        return Err(Error::NotSplit);
    };
    let clique: BTreeSet<String> = clique.iter().map(|&v| g.label(v).to_string()).collect();
    let indep: BTreeSet<String> = indep.iter().map(|&v| g.label(v).to_string()).collect();

    // translation target: a generic interior point of the clique's common
    // region, avoiding every rectangle coordinate
    let (x0, y0) = {
        let mut xlo: Option<Rational> = None;
        let mut xhi: Option<Rational> = None;
        let mut ylo: Option<Rational> = None;
        let mut yhi: Option<Rational> = None;
        for label in &clique {
            let rect = &r.rects[label];
            upd_max(&mut xlo, &rect.x_lo);
            upd_min(&mut xhi, &rect.x_hi);
            upd_max(&mut ylo, &rect.y_lo);
            upd_min(&mut yhi, &rect.y_hi);
        }
        let (xlo, xhi) = match (xlo, xhi) {
            (Some(a), Some(b)) => (a, b),
            _ => (rint(0), rint(1)), // empty clique: anywhere works
        };
        let (ylo, yhi) = match (ylo, yhi) {
            (Some(a), Some(b)) => (a, b),
            _ => (rint(0), rint(1)),
        };
        if xlo > xhi || ylo > yhi {
            return Err(Error::InvalidRepresentation {
                mode: "rectangle".into(),
                summary: "clique rectangles have empty common intersection".into(),
            });
        }
        let xs: Vec<Rational> =
            r.rects.values().flat_map(|t| [t.x_lo.clone(), t.x_hi.clone()]).collect();
        let ys: Vec<Rational> =
            r.rects.values().flat_map(|t| [t.y_lo.clone(), t.y_hi.clone()]).collect();
        (generic_point_in(&xlo, &xhi, &xs), generic_point_in(&ylo, &yhi, &ys))
    };
    let shifted: BTreeMap<String, Rect> = r
        .rects
        .iter()
        .map(|(l, t)| {
            (
                l.clone(),
                Rect {
                    x_lo: &t.x_lo - &x0,
                    x_hi: &t.x_hi - &x0,
                    y_lo: &t.y_lo - &y0,
                    y_hi: &t.y_hi - &y0,
                },
            )
        })
        .collect();

    let mut y_max = rint(0);
    let mut y_min = rint(0);
    for label in &clique {
        let t = &shifted[label];
        y_max = y_max.max(t.y_hi.clone());
        y_min = y_min.min(t.y_lo.clone());
    }

    let mut out: BTreeMap<String, Rect> = BTreeMap::new();
    for label in &clique {
        out.insert(label.clone(), shifted[label].clone());
    }
    let mut used_x: BTreeSet<Rational> = BTreeSet::new();
    for label in &indep {
        let v = g.index_of_label(label).unwrap();
        // A_u = intersection over the closed neighborhood
        let mut a = shifted[label].clone();
        for w in g.neighbors(v) {
            let t = &shifted[g.label(w)];
            a.x_lo = a.x_lo.max(t.x_lo.clone());
            a.x_hi = a.x_hi.min(t.x_hi.clone());
            a.y_lo = a.y_lo.max(t.y_lo.clone());
            a.y_hi = a.y_hi.min(t.y_hi.clone());
        }
        if a.x_lo > a.x_hi || a.y_lo > a.y_hi {
            return Err(Error::InvalidRepresentation {
                mode: "rectangle".into(),
                summary: format!("empty neighborhood region for '{label}'"),
            });
        }
        let px = pick_unused(&a.x_lo, &a.x_hi, &mut used_x)?;
        let zero = rint(0);
        let py = if a.y_lo > zero || a.y_hi < zero {
            mid(&a.y_lo, &a.y_hi)
        } else if a.y_hi > zero {
            &a.y_hi / rint(2)
        } else if a.y_lo < zero {
            &a.y_lo / rint(2)
        } else {
            return Err(Error::Precondition(format!(
                "neighborhood region of '{label}' degenerates onto the middle axis; \
                 the input representation needs distinct coordinates"
            )));
        };
        // the segment runs from p_u to the outer line on its side; when p_u
        // already lies beyond that line (detached vertices far out), the
        // segment hangs from the line instead
        let rect = if py > zero {
            let top = &y_max + rint(1);
            Rect::new(px.clone(), px, py.clone().min(top.clone()), py.max(top))
        } else {
            let bot = &y_min - rint(1);
            Rect::new(px.clone(), px, py.clone().min(bot.clone()), py.max(bot))
        };
        out.insert(label.clone(), rect);
    }
    let stabs = vec![&y_min - rint(1), rint(0), &y_max + rint(1)];
    let rep = StabbedRepresentation::new(stabs, out);
    validate_ok(&rep, g, StabMode::Esrig)?;
    Ok(rep)
}

fn upd_max(slot: &mut Option<Rational>, v: &Rational) {
    if slot.as_ref().map_or(true, |s| v > s) {
        *slot = Some(v.clone());
    }
}

fn upd_min(slot: &mut Option<Rational>, v: &Rational) {
    if slot.as_ref().map_or(true, |s| v < s) {
        *slot = Some(v.clone());
    }
}

/// A point in `[lo, hi]` avoiding the given values (possible whenever
/// `lo < hi`; falls back to `lo` for degenerate ranges).
fn generic_point_in(lo: &Rational, hi: &Rational, avoid: &[Rational]) -> Rational {
    if lo == hi {
        return lo.clone();
    }
    let mut cand = mid(lo, hi);
    let mut denom = 3i64;
    while avoid.contains(&cand) {
        cand = lo + (hi - lo) / rint(denom);
        denom += 1;
    }
    cand
}

fn pick_unused(lo: &Rational, hi: &Rational, used: &mut BTreeSet<Rational>) -> Result<Rational> {
    if lo == hi {
        if used.contains(lo) {
            return Err(Error::Precondition(
                "two independent vertices force the same x-coordinate; \
                 the input representation needs distinct coordinates"
                    .into(),
            ));
        }
        used.insert(lo.clone());
        return Ok(lo.clone());
    }
    let mut cand = mid(lo, hi);
    let mut denom = 3i64;
    while used.contains(&cand) {
        cand = lo + (hi - lo) / rint(denom);
        denom += 1;
    }
    used.insert(cand.clone());
    Ok(cand)
}

/// Random split graph together with a planted box representation: clique
/// rectangles all containing the origin, independent vertices as isolated
/// points.
pub fn planted_split_instance(n: usize, rng: &mut impl Rng) -> (Graph, BoxRepresentation) {
    let c = rng.gen_range(1..=n.clamp(1, 8));
    let mut rects = BTreeMap::new();
    for t in 0..c {
        let xlo = -rint(rng.gen_range(2..80)) - rfrac(t as i64 + 1, 97);
        let xhi = rint(rng.gen_range(2..80)) + rfrac(t as i64 + 1, 89);
        let ylo = -rint(rng.gen_range(2..80)) - rfrac(t as i64 + 1, 83);
        let yhi = rint(rng.gen_range(2..80)) + rfrac(t as i64 + 1, 79);
        rects.insert(format!("c{t:02}"), Rect::new(xlo, xhi, ylo, yhi));
    }
    for t in 0..n.saturating_sub(c) {
        let x = rint(rng.gen_range(-90..90)) + rfrac(t as i64 + 1, 101);
        let y = rint(rng.gen_range(-90..90)) + rfrac(t as i64 + 1, 103);
        rects.insert(format!("u{t:02}"), Rect::new(x.clone(), x, y.clone(), y));
    }
    let g = intersection_graph(&rects);
    (g, BoxRepresentation { rects })
}

/// The 18-vertex split fixture: a 4-clique plus one independent vertex for
/// every nonempty subset of it of size at most 3, with a planted box
/// representation (independent vertices as points inside the matching cells
/// of the clique arrangement).
pub fn split_fixture() -> (Graph, BoxRepresentation) {
    let mut rects = BTreeMap::new();
    let fr = rfrac;
    rects.insert("k1".into(), Rect::new(rint(0), rint(20), fr(1, 4), rint(3)));
    rects.insert("k2".into(), Rect::new(fr(1, 2), fr(41, 2), rint(2), fr(19, 4)));
    rects.insert("k3".into(), Rect::new(rint(5), rint(8), rint(-2), rint(7)));
    rects.insert("k4".into(), Rect::new(fr(57, 8), rint(10), fr(-7, 4), fr(27, 4)));
    let pts: [(&str, i64, i64); 14] = [
        ("u1", 10, 10),
        ("u2", 11, 41),
        ("u3", 56, 61),
        ("u4", 93, 59),
        ("u12", 13, 23),
        ("u13", 53, 12),
        ("u14", 91, 8),
        ("u23", 59, 42),
        ("u24", 96, 38),
        ("u34", 74, 62),
        ("u123", 63, 26),
        ("u124", 86, 22),
        ("u134", 76, 14),
        ("u234", 78, 44),
    ];
    for (name, px, py) in pts {
        let x = fr(px, 10);
        let y = fr(py, 10);
        rects.insert(name.into(), Rect::new(x.clone(), x, y.clone(), y));
    }
    let g = intersection_graph(&rects);
    (g, BoxRepresentation { rects })
}

pub(crate) fn ceil_log2(m: usize) -> usize {
    if m <= 1 {
        0
    } else {
        (usize::BITS - (m - 1).leading_zeros()) as usize
    }
}

/// Exactly stabbed representation of a connected block graph with
/// `max(1, ceil(log2 m))` stab lines at `y = 0..k-1`, where `m` is the
/// number of blocks. Recursive: the chosen block is laid out as nested
/// intervals on the bottom line, light pendant components are lifted one
/// line up into slots between consecutive left endpoints, and the unique
/// heavy component (more than `m/2` blocks), if any, shares all `k` lines in
/// the right half of the window.
pub fn block_graph_rep(g: &Graph) -> Result<StabbedRepresentation> {
    let comps = g.connected_components();
    if comps.len() > 1 {
        return Err(Error::Disconnected(
            g.label(comps[0][0]).to_string(),
            g.label(comps[1][0]).to_string(),
        ));
    }
    if g.n() == 0 {
        return Err(Error::ParameterOutOfRange("empty graph".into()));
    }
    let bt = graph::block_tree(g)?;
    for b in &bt.blocks {
        for (i, &u) in b.iter().enumerate() {
            for &v in &b[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(Error::NotABlockGraph(
                        b.iter().map(|&x| g.label(x)).collect::<Vec<_>>().join(","),
                    ));
                }
            }
        }
    }
    let s0 = BTreeSet::from([*bt.blocks[0].iter().min().unwrap()]);
    let (rects, k) = rep_rec(g, &s0, &rint(0), &rint(1), &rint(0))?;
    let stabs = (0..k as i64).map(rint).collect();
    let rep = StabbedRepresentation::new(stabs, rects);
    validate_ok(&rep, g, StabMode::Esrig)?;
    Ok(rep)
}

/// Worker: representation of connected block graph `g` with `S` accessible
/// in window `(a, b)` above floor `h`; returns label-keyed rectangles and
/// the number of stab lines used (lines sit at integers `0..k`).
fn rep_rec(
    g: &Graph,
    s: &BTreeSet<usize>,
    a: &Rational,
    b: &Rational,
    h: &Rational,
) -> Result<(BTreeMap<String, Rect>, usize)> {
    let bt = graph::block_tree(g)?;
    let m = bt.blocks.len();
    let k = ceil_log2(m).max(1);

    let block_idx = bt
        .blocks
        .iter()
        .position(|blk| s.iter().all(|v| blk.contains(v)))
        .ok_or_else(|| Error::Internal("S is not contained in a single block".into()))?;

    let rects = if m <= 2 {
        base_case(g, &bt, block_idx, s, a, b, h)
    } else {
        heavy_light_case(g, &bt, block_idx, s, a, b, h, m, k)?
    };

    // recursion contract: S accessible, spans inside (a, b), floor respected
    let spec = AccessibleSpec {
        s: s.iter().map(|&v| g.label(v).to_string()).collect(),
        a: a.clone(),
        b: b.clone(),
        h: h.clone(),
    };
    let probe = StabbedRepresentation::new((0..k as i64).map(rint).collect(), rects.clone());
    if !spec.check(&probe) {
        return Err(Error::Internal("accessibility contract violated".into()));
    }
    Ok((rects, k))
}

#[allow(clippy::too_many_arguments)]
fn heavy_light_case(
    g: &Graph,
    bt: &graph::BlockTree,
    block_idx: usize,
    s: &BTreeSet<usize>,
    a: &Rational,
    b: &Rational,
    h: &Rational,
    m: usize,
    k: usize,
) -> Result<BTreeMap<String, Rect>> {
    let block: Vec<usize> = {
        let mut rest: Vec<usize> =
            bt.blocks[block_idx].iter().copied().filter(|v| !s.contains(v)).collect();
        rest.sort_unstable();
        let mut order: Vec<usize> = s.iter().copied().collect();
        order.extend(rest);
        order
    };
    let nb = block.len();
    let midpt = mid(a, b);

    // components of G - B, each attached to exactly one block vertex
    let block_set: BTreeSet<usize> = block.iter().copied().collect();
    let mut comp_info: Vec<(Vec<usize>, usize, usize)> = Vec::new();
    {
        let mut seen: Vec<bool> = (0..g.n()).map(|v| block_set.contains(&v)).collect();
        for start in 0..g.n() {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut verts = Vec::new();
            let mut attach: BTreeSet<usize> = BTreeSet::new();
            while let Some(u) = stack.pop() {
                verts.push(u);
                for w in g.neighbors(u) {
                    if block_set.contains(&w) {
                        attach.insert(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if attach.len() != 1 {
                return Err(Error::Internal(format!(
                    "pendant component attaches to {} block vertices",
                    attach.len()
                )));
            }
            verts.sort_unstable();
            let (sub, _) = g.induced(&verts);
            let mb = graph::block_tree(&sub)?.blocks.len();
            comp_info.push((verts, *attach.iter().next().unwrap(), mb));
        }
    }
    let heavy_idx = comp_info.iter().position(|(_, _, mb)| 2 * mb > m);

    // nested interval layout of the block inside (a, midpt): lefts ascend in
    // block order inside the left quarter, rights descend inside the quarter
    // left of the midpoint, so every pair shares the middle segment
    let q_zone = (&midpt - a) / rint(4);
    let c_of = |i: usize| a + &q_zone * rfrac(i as i64 + 1, nb as i64 + 1);
    let d_of = |i: usize| &midpt - &q_zone * rfrac(i as i64 + 1, nb as i64 + 1);
    let h_of = |i: usize| h + (rint(1) - h) * rfrac(i as i64 + 1, nb as i64 + 1);

    let mut rects: BTreeMap<String, Rect> = BTreeMap::new();

    let mut light_of: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (ci, (_, attach, _)) in comp_info.iter().enumerate() {
        if Some(ci) != heavy_idx {
            light_of.entry(*attach).or_default().push(ci);
        }
    }
    for comps in light_of.values_mut() {
        comps.sort_by_key(|&ci| comp_info[ci].0.iter().min().copied());
    }

    for (i, &u) in block.iter().enumerate() {
        let ci = c_of(i);
        let next_c = if i + 1 < nb { c_of(i + 1) } else { d_of(nb - 1) };
        let hi = h_of(i);
        let lights = light_of.get(&u).cloned().unwrap_or_default();
        let t = lights.len();
        if t > 0 {
            let qs = interior_points(&ci, &next_c, t + 1);
            for (j, &cidx) in lights.iter().enumerate() {
                let (verts, _, _) = &comp_info[cidx];
                let (sub, back) = g.induced(verts);
                let sub_s: BTreeSet<usize> =
                    (0..sub.n()).filter(|&lv| g.has_edge(back[lv], u)).collect();
                let (sub_rects, sub_k) = rep_rec(&sub, &sub_s, &qs[j], &qs[j + 1], &rint(0))?;
                debug_assert!(sub_k <= k - 1);
                let sub_s_labels: BTreeSet<String> =
                    sub_s.iter().map(|&lv| sub.label(lv).to_string()).collect();
                let zero = rint(0);
                for (label, r) in sub_rects {
                    let on_bottom = r.stabbed_by(&zero);
                    let lifted = if sub_s_labels.contains(&label) {
                        debug_assert!(on_bottom);
                        Rect::new(r.x_lo, r.x_hi, hi.clone(), &r.y_hi + rint(1))
                    } else if on_bottom {
                        Rect::new(r.x_lo, r.x_hi, rint(1), &r.y_hi + rint(1))
                    } else {
                        Rect::new(r.x_lo, r.x_hi, &r.y_lo + rint(1), &r.y_hi + rint(1))
                    };
                    rects.insert(label, lifted);
                }
            }
        }
        let is_heavy_attach = heavy_idx.map_or(false, |hidx| comp_info[hidx].1 == u);
        if !is_heavy_attach {
            rects.insert(g.label(u).to_string(), Rect::new(ci, d_of(i), rint(0), hi));
        }
    }

    // heavy component occupies (midpt, b) over all k lines; its attach
    // vertex stretches right to reach the accessible set's left edges
    if let Some(hidx) = heavy_idx {
        let (verts, attach, _) = &comp_info[hidx];
        let (sub, back) = g.induced(verts);
        let sub_s: BTreeSet<usize> =
            (0..sub.n()).filter(|&lv| g.has_edge(back[lv], *attach)).collect();
        let i_star = block.iter().position(|v| v == attach).unwrap();
        let (sub_rects, sub_k) = rep_rec(&sub, &sub_s, &midpt, b, &h_of(nb - 1))?;
        debug_assert!(sub_k <= k);
        let sub_s_labels: BTreeSet<String> =
            sub_s.iter().map(|&lv| sub.label(lv).to_string()).collect();
        let reach = sub_rects
            .iter()
            .filter(|(l, _)| sub_s_labels.contains(*l))
            .map(|(_, r)| r.x_lo.clone())
            .max()
            .ok_or_else(|| Error::Internal("heavy component with empty attachment set".into()))?;
        rects.extend(sub_rects);
        rects.insert(
            g.label(*attach).to_string(),
            Rect::new(c_of(i_star), reach, rint(0), h_of(i_star)),
        );
    }
    Ok(rects)
}

/// Interval layout for at most two blocks: everything on the bottom line.
fn base_case(
    g: &Graph,
    bt: &graph::BlockTree,
    block_idx: usize,
    s: &BTreeSet<usize>,
    a: &Rational,
    b: &Rational,
    h: &Rational,
) -> BTreeMap<String, Rect> {
    let w = (b - a) / rint(8);
    let n = g.n();
    let h_of = |i: usize| h + (rint(1) - h) * rfrac(i as i64 + 1, n as i64 + 1);
    let mut rects = BTreeMap::new();

    let mut primary: Vec<usize> = s.iter().copied().collect();
    let mut rest: Vec<usize> =
        bt.blocks[block_idx].iter().copied().filter(|v| !s.contains(v)).collect();
    rest.sort_unstable();
    primary.extend(rest);

    if bt.blocks.len() == 1 {
        // one clique: nested intervals, lefts ascending in primary order
        let nb = primary.len() as i64;
        for (i, &v) in primary.iter().enumerate() {
            let lo = a + &w * rfrac(i as i64 + 1, nb + 1);
            let hi = a + &w * rint(3) - &w * rfrac(i as i64 + 1, nb + 1);
            rects.insert(g.label(v).to_string(), Rect::new(lo, hi, rint(0), h_of(i)));
        }
        return rects;
    }
    // two blocks sharing one cut vertex: primary block around p1, the other
    // around p2, the cut vertex spanning both
    let other_idx = 1 - block_idx;
    let cut = *bt.blocks[block_idx]
        .iter()
        .find(|v| bt.blocks[other_idx].contains(v))
        .expect("two blocks of a connected graph share their cut vertex");
    let p1 = a + &w * rint(2);
    let np = primary.len() as i64;
    for (i, &v) in primary.iter().enumerate() {
        let lo = a + &w * rfrac(i as i64 + 1, np + 1);
        let hi = if v == cut {
            a + &w * rfrac(21, 4)
        } else {
            &p1 + &w * rfrac(np - i as i64, np + 1)
        };
        rects.insert(g.label(v).to_string(), Rect::new(lo, hi, rint(0), h_of(i)));
    }
    let second: Vec<usize> = {
        let mut sv: Vec<usize> =
            bt.blocks[other_idx].iter().copied().filter(|&v| v != cut).collect();
        sv.sort_unstable();
        sv
    };
    let p2 = a + &w * rint(5);
    let ns = second.len() as i64;
    for (j, &v) in second.iter().enumerate() {
        let lo = a + &w * rint(4) + &w * rfrac(j as i64 + 1, ns + 1);
        let hi = &p2 + &w * rfrac(ns - j as i64, ns + 1);
        rects.insert(
            g.label(v).to_string(),
            Rect::new(lo, hi, rint(0), h_of(primary.len() + j)),
        );
    }
    rects
}

/// Random connected block graph built by repeatedly gluing a random clique
/// at a random existing vertex; `n` bounds the vertex count.
pub fn random_block_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(vec!["v0".to_string()]);
    while g.n() < n.max(1) {
        let anchor = rng.gen_range(0..g.n());
        let room = (n - g.n()).min(4).max(1);
        let extra = rng.gen_range(1..=room);
        let mut members = vec![anchor];
        for _ in 0..extra {
            let id = g.add_vertex(format!("v{}", g.n()));
            members.push(id);
        }
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                g.add_edge(members[i], members[j]);
            }
        }
    }
    g
}

/// The two bipartite fixtures: a 3-exactly-stabbed representation of
/// `K_{3,3}` and a 4-stabbed (not exactly stabbed) representation of
/// `K_{4,4}`.
pub fn fixture_reps() -> ((StabbedRepresentation, Graph), (StabbedRepresentation, Graph)) {
    // K_{3,3}: one side on the middle line with pairwise disjoint spans,
    // the other side as three full-width slabs on lines 0, 1, 2
    let mut rects = BTreeMap::new();
    for (j, xs) in [(1i64, 0i64), (2, 2), (3, 4)] {
        rects.insert(
            format!("x{j}"),
            Rect::new(rint(xs), rint(xs + 1), rfrac(4, 5), rfrac(6, 5)),
        );
    }
    rects.insert("y1".into(), Rect::new(rint(-1), rint(6), rfrac(-1, 2), rfrac(17, 20)));
    rects.insert("y2".into(), Rect::new(rint(-1), rint(6), rfrac(19, 20), rfrac(21, 20)));
    rects.insert("y3".into(), Rect::new(rint(-1), rint(6), rfrac(23, 20), rfrac(5, 2)));
    let k33_rep = StabbedRepresentation::new(vec![rint(0), rint(1), rint(2)], rects);
    let k33 = complete_bipartite(3, 3);

    // K_{4,4}: one side as tall columns crossing all four lines, the other
    // as one full-width slab per line
    let mut rects = BTreeMap::new();
    for j in 0..4i64 {
        rects.insert(
            format!("x{}", j + 1),
            Rect::new(rint(2 * j), rint(2 * j + 1), rint(0), rint(3)),
        );
    }
    for j in 0..4i64 {
        rects.insert(
            format!("y{}", j + 1),
            Rect::new(rint(-1), rint(9), rint(j) - rfrac(1, 10), rint(j) + rfrac(1, 10)),
        );
    }
    let k44_rep = StabbedRepresentation::new(vec![rint(0), rint(1), rint(2), rint(3)], rects);
    let k44 = complete_bipartite(4, 4);
    ((k33_rep, k33), (k44_rep, k44))
}

/// `K_{p,q}` with sides labeled `x1..xp` and `y1..yq`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut labels = Vec::new();
    for i in 1..=p {
        labels.push(format!("x{i}"));
    }
    for j in 1..=q {
        labels.push(format!("y{j}"));
    }
    let mut g = Graph::new(labels);
    for i in 0..p {
        for j in 0..q {
            g.add_edge(i, p + j);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::validate;
    use rand::SeedableRng;

    #[test]
    fn grid_reps_validate() {
        for (h, w) in [(1, 5), (2, 2), (3, 3), (2, 5), (3, 8), (5, 3)] {
            let (rep, g) = grid_rep(h, w).unwrap();
            assert_eq!(rep.k(), h.min(w), "grid ({h},{w})");
            let report = validate(&rep, &g, StabMode::Esrig).unwrap();
            assert!(report.valid, "grid ({h},{w}): {report:?}");
        }
        assert!(grid_rep(0, 3).is_err());
    }

    #[test]
    fn grid_rep_matches_grid_graph() {
        let (rep, g) = grid_rep(3, 3).unwrap();
        let gg = intersection_graph(&rep.rects);
        assert_eq!(gg.n(), g.n());
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let gu = g.index_of_label(gg.label(u)).unwrap();
                let gv = g.index_of_label(gg.label(v)).unwrap();
                assert_eq!(gg.has_edge(u, v), g.has_edge(gu, gv), "{} {}", gg.label(u), gg.label(v));
            }
        }
    }

    #[test]
    fn split_fixture_shape() {
        let (g, _) = split_fixture();
        assert_eq!(g.n(), 18);
        let p = graph::basic_predicates(&g).unwrap();
        assert!(p.is_split);
        assert_eq!(p.clique_number, 4);
        for (label, subset) in [("u1", vec!["k1"]), ("u134", vec!["k1", "k3", "k4"])] {
            let v = g.index_of_label(label).unwrap();
            let nb: Vec<String> = g.neighbors(v).map(|w| g.label(w).to_string()).collect();
            assert_eq!(nb, subset, "{label}");
        }
        let indeps: Vec<usize> = (0..g.n()).filter(|&v| g.label(v).starts_with('u')).collect();
        assert_eq!(indeps.len(), 14);
        for (i, &u) in indeps.iter().enumerate() {
            assert_eq!(g.degree(u), g.label(u).len() - 1, "{}", g.label(u));
            for &v in &indeps[i + 1..] {
                assert!(!g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn split_fixture_converts_to_3esrig() {
        let (g, r) = split_fixture();
        let rep = split_to_3esrig(&g, &r).unwrap();
        assert_eq!(rep.k(), 3);
        assert_eq!(rep.rects.len(), 18);
        assert!(validate(&rep, &g, StabMode::Esrig).unwrap().valid);
    }

    #[test]
    fn trivial_split_instance() {
        let mut rects = BTreeMap::new();
        rects.insert("a".into(), Rect::new(rint(0), rint(2), rint(0), rint(2)));
        rects.insert("b".into(), Rect::new(rint(1), rint(3), rint(1), rint(3)));
        let g = intersection_graph(&rects);
        let rep = split_to_3esrig(&g, &BoxRepresentation { rects }).unwrap();
        assert!(validate(&rep, &g, StabMode::Esrig).unwrap().valid);
    }

    #[test]
    fn planted_split_instances_convert() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..25 {
            let n = rng.gen_range(1..=30);
            let (g, r) = planted_split_instance(n, &mut rng);
            let rep = split_to_3esrig(&g, &r).unwrap();
            assert!(validate(&rep, &g, StabMode::Esrig).unwrap().valid);
        }
    }

    #[test]
    fn split_rejects_non_split() {
        let mut rects = BTreeMap::new();
        rects.insert("0".into(), Rect::new(rint(0), rint(2), rint(0), rint(10)));
        rects.insert("1".into(), Rect::new(rint(1), rint(4), rint(4), rint(6)));
        rects.insert("2".into(), Rect::new(rint(3), rint(5), rint(0), rint(10)));
        rects.insert("3".into(), Rect::new(rint(1), rint(4), rint(-2), rint(1)));
        let g = intersection_graph(&rects);
        assert_eq!(g.m(), 4, "fixture should be a 4-cycle");
        assert!(matches!(
            split_to_3esrig(&g, &BoxRepresentation { rects }),
            Err(Error::NotSplit)
        ));
    }

    #[test]
    fn block_graph_rep_small_cases() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let rep = block_graph_rep(&k4).unwrap();
        assert_eq!(rep.k(), 1);
        assert!(validate(&rep, &k4, StabMode::Esrig).unwrap().valid);

        // P5 has 4 blocks: bound says <= 2 lines
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let rep = block_graph_rep(&p5).unwrap();
        assert!(rep.k() <= 2);
        assert!(validate(&rep, &p5, StabMode::Esrig).unwrap().valid);

        let k1 = Graph::with_n(1);
        let rep = block_graph_rep(&k1).unwrap();
        assert!(validate(&rep, &k1, StabMode::Esrig).unwrap().valid);
    }

    #[test]
    fn block_graph_rep_respects_log_bound() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let n = rng.gen_range(1..=60);
            let g = random_block_graph(n, &mut rng);
            let m = graph::block_tree(&g).unwrap().blocks.len();
            let rep = block_graph_rep(&g).unwrap();
            assert!(rep.k() <= ceil_log2(m).max(1), "m={m} k={}", rep.k());
            assert!(validate(&rep, &g, StabMode::Esrig).unwrap().valid);
        }
    }

    #[test]
    fn block_graph_rep_rejects_bad_inputs() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(matches!(block_graph_rep(&c4), Err(Error::NotABlockGraph(_))));
        let mut disc = Graph::with_n(3);
        disc.add_edge(0, 1);
        assert!(matches!(block_graph_rep(&disc), Err(Error::Disconnected(_, _))));
    }

    #[test]
    fn fixtures_validate() {
        let ((k33_rep, k33), (k44_rep, k44)) = fixture_reps();
        assert!(validate(&k33_rep, &k33, StabMode::Esrig).unwrap().valid);
        assert!(validate(&k44_rep, &k44, StabMode::Srig).unwrap().valid);
        let esrig_report = validate(&k44_rep, &k44, StabMode::Esrig).unwrap();
        assert!(!esrig_report.valid);
        assert!(!esrig_report.multi_stabbed.is_empty());
    }
}
