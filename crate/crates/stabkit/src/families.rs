//! Generators for the extremal tree and block-graph families that separate
//! stab classes, together with their stabbed representations and the
//! machine-checkable lower-bound certificate chains.
//!
//! The core family `G_l` is a recursive ternary spider: `G_1` is a single
//! vertex; `G_l` hangs three copies of `G_{l-1}` off the leaves of a star
//! `K_{1,3}`. `D_l` uses a `K_{1,7}` over seven copies of `G_{l-1}`.
//! `F_l` (resp. `J_l`) joins two copies of `G_l` (resp. `D_l`) through a new
//! center via paths of length two. Vertex labels are dotted paths
//! (`t2.t1.u` style) so witnesses stay readable.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::rat::{mid, rfrac, rint, Rational};
use crate::representation::{Rect, StabbedRepresentation};

/// A tree with a distinguished root and parent pointers.
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub graph: Graph,
    pub root: usize,
    pub parent: Vec<Option<usize>>,
}

impl RootedTree {
    fn from_root(graph: Graph, root: usize) -> Self {
        let mut parent = vec![None; graph.n()];
        let mut seen = vec![false; graph.n()];
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in graph.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        RootedTree { graph, root, parent }
    }

    /// True iff `anc` lies on the path from the root to `v`.
    pub fn is_ancestor(&self, anc: usize, v: usize) -> bool {
        let mut cur = Some(v);
        while let Some(u) = cur {
            if u == anc {
                return true;
            }
            cur = self.parent[u];
        }
        false
    }
}

/// Number of vertices of the ternary family: `|G_l| = 3^l - 2`.
pub fn g_size(l: u32) -> usize {
    3usize.pow(l) - 2
}

/// Number of vertices of the septenary family: `|D_l| = 7 * 3^(l-1) - 6`.
pub fn d_size(l: u32) -> usize {
    7 * 3usize.pow(l - 1) - 6
}

fn add_star_tree(g: &mut Graph, l: usize, prefix: &str, arms: usize) -> usize {
    let root = g.add_vertex(format!("{prefix}u"));
    if l == 1 {
        return root;
    }
    for i in 1..=arms {
        let arm = g.add_vertex(format!("{prefix}a{i}"));
        g.add_edge(root, arm);
        let sub = add_star_tree(g, l - 1, &format!("{prefix}t{i}."), 3);
        g.add_edge(arm, sub);
    }
    root
}

/// The ternary spider `G_l` (`l >= 1`), rooted at its center.
pub fn gen_g(l: usize) -> Result<RootedTree> {
    if l < 1 {
        return Err(Error::ParameterOutOfRange("G_l needs l >= 1".into()));
    }
    let mut g = Graph::new(vec![]);
    let root = add_star_tree(&mut g, l, "", 3);
    Ok(RootedTree::from_root(g, root))
}

/// The septenary variant `D_l` (`l >= 2`): a `K_{1,7}` over seven copies of
/// `G_{l-1}`.
pub fn gen_d(l: usize) -> Result<RootedTree> {
    if l < 2 {
        return Err(Error::ParameterOutOfRange("D_l needs l >= 2".into()));
    }
    let mut g = Graph::new(vec![]);
    let root = add_star_tree(&mut g, l, "", 7);
    Ok(RootedTree::from_root(g, root))
}

fn add_join(g: &mut Graph, l: usize, arms: usize, prefix: &str) -> (usize, usize, usize) {
    let left = add_star_tree(g, l, &format!("{prefix}L."), arms);
    let right = add_star_tree(g, l, &format!("{prefix}R."), arms);
    let z = g.add_vertex(format!("{prefix}z"));
    let pl = g.add_vertex(format!("{prefix}pL"));
    let pr = g.add_vertex(format!("{prefix}pR"));
    g.add_edge(z, pl);
    g.add_edge(pl, left);
    g.add_edge(z, pr);
    g.add_edge(pr, right);
    (z, left, right)
}

/// `F_l` (`l >= 1`): two copies of `G_l` joined through a new center by
/// paths of length two; rooted at the center.
pub fn gen_f(l: usize) -> Result<RootedTree> {
    if l < 1 {
        return Err(Error::ParameterOutOfRange("F_l needs l >= 1".into()));
    }
    let mut g = Graph::new(vec![]);
    let (z, _, _) = add_join(&mut g, l, 3, "");
    Ok(RootedTree::from_root(g, z))
}

/// `J_l` (`l >= 2`): two copies of `D_l` joined through a new center by
/// paths of length two; rooted at the center.
pub fn gen_j(l: usize) -> Result<RootedTree> {
    if l < 2 {
        return Err(Error::ParameterOutOfRange("J_l needs l >= 2".into()));
    }
    let mut g = Graph::new(vec![]);
    let (z, _, _) = add_join(&mut g, l, 7, "");
    Ok(RootedTree::from_root(g, z))
}

/// Recursive layout state: the root's span and its private right margin (an
/// x-range met by no other rectangle's span of the same subtree).
struct StarParts {
    root_label: String,
    private: (Rational, Rational),
}

/// Lays out the `l`-line representation of a star tree in `window`,
/// inserting rectangles into `out`. Invariants maintained per subtree, with
/// lines at integers `0..l`:
/// - every span strictly inside `window`;
/// - top-line rectangles are exactly the closed neighborhood of the root;
/// - the root's top edge `(l-1) + 1/5` strictly dominates all other tops
///   (arms reach `+1/10`), and every bottom stays above `line - 1/4`;
/// - the root's span keeps a private right margin;
/// - spans nest along ancestor chains.
fn star_rects(
    l: usize,
    prefix: &str,
    window: (Rational, Rational),
    arms: usize,
    out: &mut BTreeMap<String, Rect>,
) -> StarParts {
    let (a, b) = window;
    let w = &b - &a;
    let pad = &w / rint(20);
    let root_label = format!("{prefix}u");
    let top = rint(l as i64 - 1);
    let root_span = (&a + &pad, &b - &pad);
    let private = (&b - &pad * rint(5), &b - &pad * rint(3));
    if l == 1 {
        out.insert(
            root_label.clone(),
            Rect::new(root_span.0, root_span.1, &top - rfrac(1, 10), &top + rfrac(1, 5)),
        );
        return StarParts { root_label, private };
    }
    // children zone split into windows separated by equal gaps
    let zone_lo = &a + &pad * rint(2);
    let zone_hi = &b - &pad * rint(6);
    let slice = (&zone_hi - &zone_lo) / rint(2 * arms as i64 + 1);
    for i in 0..arms {
        let win_lo = &zone_lo + &slice * rint(2 * i as i64 + 1);
        let win_hi = &zone_lo + &slice * rint(2 * i as i64 + 2);
        let sub_prefix = format!("{prefix}t{}.", i + 1);
        let sub = star_rects(l - 1, &sub_prefix, (win_lo.clone(), win_hi.clone()), 3, out);
        let arm_label = format!("{prefix}a{}", i + 1);
        let arm_span = (&win_lo - &slice / rint(4), &win_hi + &slice / rint(4));
        out.insert(
            arm_label,
            Rect::new(
                arm_span.0,
                arm_span.1,
                &top - rint(1) + rfrac(3, 20),
                &top + rfrac(1, 10),
            ),
        );
        let _ = sub;
    }
    out.insert(
        root_label.clone(),
        Rect::new(root_span.0, root_span.1, &top - rfrac(1, 10), &top + rfrac(1, 5)),
    );
    StarParts { root_label, private }
}

/// Mirrors every rectangle with the given prefix about the vertical line
/// `x = axis` (for right-hand copies whose private margin must face left).
fn mirror_x_prefix(out: &mut BTreeMap<String, Rect>, prefix: &str, axis: &Rational) {
    let two = rint(2);
    for (label, r) in out.iter_mut() {
        if label.starts_with(prefix) {
            let lo = &two * axis - &r.x_hi;
            let hi = &two * axis - &r.x_lo;
            r.x_lo = lo;
            r.x_hi = hi;
        }
    }
}

/// Which vertices of the connecting path sit on the top stab line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinMode {
    /// The whole root-to-root path rides the top line.
    PathOnTop,
    /// Only the closed neighborhoods of the two roots reach the top line;
    /// the center drops one line down (needs `l >= 2`).
    RootsOnly,
}

struct JoinParts {
    /// Open x-range inside the center's span met by no other span.
    z_interior: (Rational, Rational),
}

fn join_rects(
    l: usize,
    arms: usize,
    mode: JoinMode,
    window: (Rational, Rational),
    side_frac: Rational,
    prefix: &str,
    out: &mut BTreeMap<String, Rect>,
) -> JoinParts {
    let (a, b) = window;
    let w = &b - &a;
    let side = &w * &side_frac;
    let left_win = (a.clone(), &a + &side);
    let right_win = (&b - &side, b.clone());
    let left = star_rects(l, &format!("{prefix}L."), left_win, arms, out);
    let right = star_rects(l, &format!("{prefix}R."), right_win.clone(), arms, out);
    mirror_x_prefix(out, &format!("{prefix}R."), &mid(&right_win.0, &right_win.1));
    // mirrored private margin
    let two = rint(2);
    let axis = mid(&right_win.0, &right_win.1);
    let right_private = (&two * &axis - &right.private.1, &two * &axis - &right.private.0);

    let gap_lo = &a + &side;
    let gap_hi = &b - &side;
    let gw = &gap_hi - &gap_lo;
    let z1 = &gap_lo + &gw / rint(5);
    let z2 = &gap_hi - &gw / rint(5);
    let top = rint(l as i64 - 1);
    let (py_lo, py_hi, zy_lo, zy_hi) = match mode {
        JoinMode::PathOnTop => (
            &top - rfrac(1, 50),
            &top + rfrac(3, 50),
            &top - rfrac(2, 50),
            &top + rfrac(2, 50),
        ),
        JoinMode::RootsOnly => (
            &top - rint(1) + rfrac(1, 2),
            &top + rfrac(3, 50),
            &top - rint(1) - rfrac(1, 5),
            &top - rint(1) + rfrac(3, 5),
        ),
    };
    out.insert(
        format!("{prefix}pL"),
        Rect::new(mid(&left.private.0, &left.private.1), &z1 + &gw / rint(20), py_lo.clone(), py_hi.clone()),
    );
    out.insert(
        format!("{prefix}pR"),
        Rect::new(&z2 - &gw / rint(20), mid(&right_private.0, &right_private.1), py_lo, py_hi),
    );
    out.insert(format!("{prefix}z"), Rect::new(z1.clone(), z2.clone(), zy_lo, zy_hi));
    JoinParts { z_interior: (&z1 + &gw / rint(15), &z2 - &gw / rint(15)) }
}

/// `l`-exactly-stabbed representation of `G_l`: ancestor spans nest and the
/// top line carries exactly the closed neighborhood of the root.
pub fn rep_g(l: usize) -> Result<(StabbedRepresentation, RootedTree)> {
    let tree = gen_g(l)?;
    let mut rects = BTreeMap::new();
    star_rects(l, "", (rint(0), rint(1)), 3, &mut rects);
    let rep = StabbedRepresentation::new((0..l as i64).map(rint).collect(), rects);
    Ok((rep, tree))
}

/// Same layout for `D_l` (seven branches at the top level).
pub fn rep_d(l: usize) -> Result<(StabbedRepresentation, RootedTree)> {
    let tree = gen_d(l)?;
    let mut rects = BTreeMap::new();
    star_rects(l, "", (rint(0), rint(1)), 7, &mut rects);
    let rep = StabbedRepresentation::new((0..l as i64).map(rint).collect(), rects);
    Ok((rep, tree))
}

/// `l`-exactly-stabbed representation of `F_l` in the requested mode.
pub fn rep_f(l: usize, mode: JoinMode) -> Result<(StabbedRepresentation, RootedTree)> {
    if mode == JoinMode::RootsOnly && l < 2 {
        return Err(Error::ParameterOutOfRange(
            "the roots-only layout needs l >= 2".into(),
        ));
    }
    let tree = gen_f(l)?;
    let mut rects = BTreeMap::new();
    join_rects(l, 3, mode, (rint(0), rint(1)), rfrac(3, 10), "", &mut rects);
    let rep = StabbedRepresentation::new((0..l as i64).map(rint).collect(), rects);
    Ok((rep, tree))
}

/// `l`-exactly-stabbed representation of `J_l` with the connecting path on
/// the top line.
pub fn rep_j(l: usize) -> Result<(StabbedRepresentation, RootedTree)> {
    let tree = gen_j(l)?;
    let mut rects = BTreeMap::new();
    join_rects(l, 7, JoinMode::PathOnTop, (rint(0), rint(1)), rfrac(3, 10), "", &mut rects);
    let rep = StabbedRepresentation::new((0..l as i64).map(rint).collect(), rects);
    Ok((rep, tree))
}

/// Labels of rectangles meeting the top stab line.
pub fn top_line_labels(rep: &StabbedRepresentation) -> BTreeSet<String> {
    let top = rep.stabs.last().expect("nonempty stabs");
    rep.rects
        .iter()
        .filter(|(_, r)| r.stabbed_by(top))
        .map(|(l, _)| l.clone())
        .collect()
}

/// True iff for every ancestor pair `(w, v)` the span of `v` is contained
/// in the span of `w`.
pub fn check_ancestor_nesting(rep: &StabbedRepresentation, tree: &RootedTree) -> bool {
    for v in 0..tree.graph.n() {
        let rv = &rep.rects[tree.graph.label(v)];
        let mut cur = tree.parent[v];
        while let Some(w) = cur {
            let rw = &rep.rects[tree.graph.label(w)];
            if !(rw.x_lo <= rv.x_lo && rv.x_hi <= rw.x_hi) {
                return false;
            }
            cur = tree.parent[w];
        }
    }
    true
}

/// The block graph separating the asteroidal certificate from 3-stabbability:
/// a ternary spider with a doubled leaf (the only triangle), flanked by two
/// spider pendants through `a` and two depth-3 spiders through `b`.
#[derive(Debug, Clone)]
pub struct BlockCounterexample {
    pub graph: Graph,
    /// the doubled leaf and its twin
    pub w: usize,
    pub w_prime: usize,
    /// their common neighbour and the spider center next to it
    pub v: usize,
    pub u: usize,
    /// junction vertices of the two pendant groups
    pub a: usize,
    pub b: usize,
}

pub fn gen_block_counterexample() -> BlockCounterexample {
    let mut g = Graph::new(vec![]);
    let t_root = add_star_tree(&mut g, 2, "T.", 3);
    let w = g.index_of_label("T.t1.u").unwrap();
    let v = g.index_of_label("T.a1").unwrap();
    let w_prime = g.add_vertex("wp");
    g.add_edge(w_prime, w);
    g.add_edge(w_prime, v);

    let b1 = add_star_tree(&mut g, 2, "B1.", 3);
    let b2 = add_star_tree(&mut g, 2, "B2.", 3);
    let _ = (b1, b2);
    let a = g.add_vertex("a");
    let x1 = g.add_vertex("x1");
    let x2 = g.add_vertex("x2");
    let b1_leaf = g.index_of_label("B1.t1.u").unwrap();
    let b2_leaf = g.index_of_label("B2.t1.u").unwrap();
    g.add_edge(a, x1);
    g.add_edge(x1, b1_leaf);
    g.add_edge(a, x2);
    g.add_edge(x2, b2_leaf);
    g.add_edge(a, w);

    let c3 = add_star_tree(&mut g, 3, "C3.", 3);
    let c4 = add_star_tree(&mut g, 3, "C4.", 3);
    let b = g.add_vertex("b");
    let y1 = g.add_vertex("y1");
    let y2 = g.add_vertex("y2");
    g.add_edge(b, y1);
    g.add_edge(y1, c3);
    g.add_edge(b, y2);
    g.add_edge(y2, c4);
    g.add_edge(b, w_prime);

    BlockCounterexample { graph: g, w, w_prime, v, u: t_root, a, b }
}

/// The tree that is free of the level-`k` asteroidal obstruction yet not
/// `k`-stabbable (`k >= 4`): three joined pairs at levels `k`, `k-1`, `k-2`
/// glued to a center by paths of length two.
pub fn gen_tree_not_k_srig(k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(Error::ParameterOutOfRange("needs k >= 4".into()));
    }
    let mut g = Graph::new(vec![]);
    let (zk, _, _) = add_join(&mut g, k, 3, "Fk.");
    let (zk1, _, _) = add_join(&mut g, k - 1, 3, "Fk1.");
    let (zk2, _, _) = add_join(&mut g, k - 2, 3, "Fk2.");
    let c = g.add_vertex("c");
    for (q, z) in [("qk", zk), ("qk1", zk1), ("qk2", zk2)] {
        let qv = g.add_vertex(q);
        g.add_edge(c, qv);
        g.add_edge(qv, z);
    }
    Ok(g)
}

/// The gap tree (`k >= 4`): `k`-stabbable by the construction below. The
/// guarantee that it is not exactly `k`-stabbable only holds for `k >= 10`
/// and is not machine-checked here.
///
/// Layout: the level-`k` join rides all `k` lines with its connecting path
/// on the bottom line; the level-`k-1` join hangs from the top line inside
/// the bottom center's private span; the level-`k-2` star sits on lines
/// `1..k-2` inside the second center's private span, next to the hub and
/// its three connector segments.
pub fn gen_gap_tree(k: usize) -> Result<(Graph, StabbedRepresentation)> {
    if k < 4 {
        return Err(Error::ParameterOutOfRange("needs k >= 4".into()));
    }
    // graph
    let mut g = Graph::new(vec![]);
    let (zk, _, _) = add_join(&mut g, k, 7, "Hk.");
    let (zk1, _, _) = add_join(&mut g, k - 1, 7, "Hm.");
    let d_root = add_star_tree(&mut g, k - 2, "D.", 7);
    let c = g.add_vertex("c");
    for (q, target) in [("qk", zk), ("qk1", zk1), ("qk2", d_root)] {
        let qv = g.add_vertex(q);
        g.add_edge(c, qv);
        g.add_edge(qv, target);
    }

    // representation
    let mut rects = BTreeMap::new();
    let r1 = join_rects(
        k,
        7,
        JoinMode::PathOnTop,
        (rint(0), rint(1000)),
        rfrac(3, 20),
        "Hk.",
        &mut rects,
    );
    // reflect the level-k join so its path sits on the bottom line
    {
        let axis = rfrac(k as i64 - 1, 2);
        let two = rint(2);
        for (label, r) in rects.iter_mut() {
            if label.starts_with("Hk.") {
                let lo = &two * &axis - &r.y_hi;
                let hi = &two * &axis - &r.y_lo;
                r.y_lo = lo;
                r.y_hi = hi;
            }
        }
    }
    let (i1, i2) = r1.z_interior;
    let r2 = join_rects(
        k - 1,
        7,
        JoinMode::PathOnTop,
        (i1, i2),
        rfrac(3, 20),
        "Hm.",
        &mut rects,
    );
    shift_y_prefix(&mut rects, "Hm.", &rint(1));
    let (q1, q2) = r2.z_interior;
    let q = &q2 - &q1;
    let w3 = (&q1 + &q / rint(10), &q1 + &q * rfrac(4, 10));
    let parts3 = star_rects(k - 2, "D.", w3, 7, &mut rects);
    shift_y_prefix(&mut rects, "D.", &rint(1));

    let (p3lo, p3hi) = parts3.private;
    let am = mid(&p3lo, &p3hi);
    let a3_y_lo = rint(k as i64 - 2) - rfrac(1, 10); // bottom edge of the star root after shifting
    rects.insert(
        "c".into(),
        Rect::new(am.clone(), &q1 + &q * rfrac(85, 100), rfrac(4, 5), rfrac(6, 5)),
    );
    rects.insert(
        "qk".into(),
        Rect::new(
            &q1 + &q * rfrac(55, 100),
            &q1 + &q * rfrac(57, 100),
            rfrac(-1, 50),
            rfrac(9, 10),
        ),
    );
    rects.insert(
        "qk1".into(),
        Rect::new(
            &q1 + &q * rfrac(60, 100),
            &q1 + &q * rfrac(62, 100),
            rfrac(11, 10),
            rint(k as i64 - 1) - rfrac(1, 50),
        ),
    );
    rects.insert(
        "qk2".into(),
        Rect::new(
            &am + (&p3hi - &am) / rint(4),
            &am + (&p3hi - &am) / rint(2),
            rfrac(17, 20),
            &a3_y_lo + rfrac(1, 20),
        ),
    );
    let rep = StabbedRepresentation::new((0..k as i64).map(rint).collect(), rects);
    Ok((g, rep))
}

fn shift_y_prefix(rects: &mut BTreeMap<String, Rect>, prefix: &str, dy: &Rational) {
    for (label, r) in rects.iter_mut() {
        if label.starts_with(prefix) {
            r.y_lo = &r.y_lo + dy;
            r.y_hi = &r.y_hi + dy;
        }
    }
}

/// Machine-checkable witness chain that a graph is not `(level-1)`-stabbable:
/// either an asteroidal triple of vertices (so the graph is not an interval
/// graph, level 2) or three pairwise neighbour-disjoint connected subgraphs,
/// asteroidal in the graph, each carrying its own chain one level down.
#[derive(Debug, Clone)]
pub enum StabLowerBoundCert {
    AsteroidalTriple { a: String, b: String, c: String },
    AsteroidalSubgraphs { members: Vec<(BTreeSet<String>, StabLowerBoundCert)> },
}

/// The recursive certificate for `G_l` built from its known structure: at
/// each level the three branches form the asteroidal triple of subgraphs,
/// and the base `G_2` exhibits its three leaves as an asteroidal triple.
pub fn g_lower_bound_cert(l: usize) -> Result<StabLowerBoundCert> {
    fn build(l: usize, prefix: &str) -> StabLowerBoundCert {
        if l == 2 {
            return StabLowerBoundCert::AsteroidalTriple {
                a: format!("{prefix}t1.u"),
                b: format!("{prefix}t2.u"),
                c: format!("{prefix}t3.u"),
            };
        }
        let mut members = Vec::new();
        for i in 1..=3 {
            let sub_prefix = format!("{prefix}t{i}.");
            let tree = {
                let mut g = Graph::new(vec![]);
                add_star_tree(&mut g, l - 1, &sub_prefix, 3);
                g
            };
            let set: BTreeSet<String> = tree.labels().iter().cloned().collect();
            members.push((set, build(l - 1, &sub_prefix)));
        }
        StabLowerBoundCert::AsteroidalSubgraphs { members }
    }
    if l < 2 {
        return Err(Error::ParameterOutOfRange("lower bound chains need l >= 2".into()));
    }
    Ok(build(l, ""))
}

/// Verifies a chain inside `g` and returns the certified lower bound on the
/// stab number (`Some(k)` means `g` is not `(k-1)`-stabbable, so
/// `stab(g) >= k`). `None` means some link failed verification.
pub fn verify_lower_bound_cert(g: &Graph, cert: &StabLowerBoundCert) -> Option<usize> {
    match cert {
        StabLowerBoundCert::AsteroidalTriple { a, b, c } => {
            let ai = g.index_of_label(a)?;
            let bi = g.index_of_label(b)?;
            let ci = g.index_of_label(c)?;
            for (x, y, z) in [(ai, bi, ci), (ai, ci, bi), (bi, ci, ai)] {
                if g.has_edge(x, z) || g.has_edge(y, z) {
                    return None;
                }
                match graph::exists_path_missing(g, x, y, &BTreeSet::from([z])) {
                    Ok(true) => {}
                    _ => return None,
                }
            }
            // an asteroidal triple rules out interval, i.e. 1-stabbable
            Some(2)
        }
        StabLowerBoundCert::AsteroidalSubgraphs { members } => {
            if members.len() != 3 {
                return None;
            }
            let sets: Vec<BTreeSet<usize>> = members
                .iter()
                .map(|(labels, _)| {
                    labels.iter().map(|l| g.index_of_label(l)).collect::<Option<BTreeSet<_>>>()
                })
                .collect::<Option<Vec<_>>>()?;
            // pairwise neighbour-disjoint, each connected
            for i in 0..3 {
                for j in i + 1..3 {
                    if !graph::neighbour_disjoint(g, &sets[i], &sets[j]) {
                        return None;
                    }
                }
                let verts: Vec<usize> = sets[i].iter().copied().collect();
                let (sub, _) = g.induced(&verts);
                if !sub.is_connected() {
                    return None;
                }
            }
            // six paths: between each pair missing the third
            for (i, j, t) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
                if graph::path_between_sets_missing(g, &sets[i], &sets[j], &sets[t]).is_none() {
                    return None;
                }
            }
            // nested chains certify each member inside its induced subgraph
            let mut level = usize::MAX;
            for (i, (_, sub_cert)) in members.iter().enumerate() {
                let verts: Vec<usize> = sets[i].iter().copied().collect();
                let (sub, _) = g.induced(&verts);
                level = level.min(verify_lower_bound_cert(&sub, sub_cert)?);
            }
            // members are certified non-(level-1)-stabbable and asteroidal
            Some(level + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::{validate, validate_with_engine, Engine, StabMode};

    #[test]
    fn family_sizes() {
        assert_eq!(gen_g(2).unwrap().graph.n(), 7);
        assert_eq!(gen_g(3).unwrap().graph.n(), 25);
        for l in 1..=6u32 {
            assert_eq!(gen_g(l as usize).unwrap().graph.n(), g_size(l));
        }
        assert_eq!(gen_f(2).unwrap().graph.n(), 17);
        assert_eq!(gen_d(2).unwrap().graph.n(), 15);
        assert_eq!(gen_d(4).unwrap().graph.n(), 183);
        assert_eq!(gen_d(3).unwrap().graph.n(), 57);
        assert_eq!(gen_j(2).unwrap().graph.n(), 2 * 15 + 3);
        assert!(gen_d(1).is_err());
        assert!(gen_j(1).is_err());
    }

    #[test]
    fn families_are_trees() {
        for tree in [gen_g(3).unwrap(), gen_f(2).unwrap(), gen_d(2).unwrap(), gen_j(2).unwrap()] {
            let g = &tree.graph;
            assert!(g.is_connected());
            assert_eq!(g.m(), g.n() - 1);
        }
    }

    #[test]
    fn rep_g_validates_with_occupancy_and_nesting() {
        for l in 1..=4 {
            let (rep, tree) = rep_g(l).unwrap();
            assert_eq!(rep.k(), l);
            assert_eq!(rep.rects.len(), tree.graph.n());
            let report = validate(&rep, &tree.graph, StabMode::Esrig).unwrap();
            assert!(report.valid, "l={l}: {report:?}");
            assert!(check_ancestor_nesting(&rep, &tree), "l={l}");
            // top line = closed neighborhood of the root
            let expect: BTreeSet<String> = tree
                .graph
                .closed_neighborhood(tree.root)
                .iter()
                .map(|&v| tree.graph.label(v).to_string())
                .collect();
            assert_eq!(top_line_labels(&rep), expect, "l={l}");
        }
    }

    #[test]
    fn rep_d_and_j_validate() {
        for l in 2..=3 {
            let (rep, tree) = rep_d(l).unwrap();
            assert!(validate(&rep, &tree.graph, StabMode::Esrig).unwrap().valid);
            assert!(check_ancestor_nesting(&rep, &tree));
            let expect: BTreeSet<String> = tree
                .graph
                .closed_neighborhood(tree.root)
                .iter()
                .map(|&v| tree.graph.label(v).to_string())
                .collect();
            assert_eq!(top_line_labels(&rep), expect);

            let (rep, tree) = rep_j(l).unwrap();
            assert!(validate(&rep, &tree.graph, StabMode::Esrig).unwrap().valid);
            // the whole connecting path rides the top line
            let tops = top_line_labels(&rep);
            for lbl in ["z", "pL", "pR", "L.u", "R.u"] {
                assert!(tops.contains(lbl), "missing {lbl}");
            }
        }
    }

    #[test]
    fn rep_f_modes() {
        for l in 2..=3 {
            let (rep, tree) = rep_f(l, JoinMode::PathOnTop).unwrap();
            assert!(validate(&rep, &tree.graph, StabMode::Esrig).unwrap().valid, "l={l}");
            let tops = top_line_labels(&rep);
            for lbl in ["z", "pL", "pR", "L.u", "R.u"] {
                assert!(tops.contains(lbl));
            }

            let (rep, tree) = rep_f(l, JoinMode::RootsOnly).unwrap();
            assert!(validate(&rep, &tree.graph, StabMode::Esrig).unwrap().valid, "l={l}");
            // top line is exactly N[L.u] ∪ N[R.u]
            let mut expect = BTreeSet::new();
            for root_label in ["L.u", "R.u"] {
                let r = tree.graph.index_of_label(root_label).unwrap();
                for v in tree.graph.closed_neighborhood(r) {
                    expect.insert(tree.graph.label(v).to_string());
                }
            }
            assert_eq!(top_line_labels(&rep), expect, "l={l}");
        }
        // path-on-top works at l=1, roots-only does not
        assert!(rep_f(1, JoinMode::PathOnTop).is_ok());
        assert!(rep_f(1, JoinMode::RootsOnly).is_err());
    }

    #[test]
    fn block_counterexample_structure() {
        let ce = gen_block_counterexample();
        let g = &ce.graph;
        assert_eq!(g.n(), 78);
        assert!(g.is_connected());
        // exactly one triangle: {w, w', v}
        let mut triangles = Vec::new();
        for u in 0..g.n() {
            for v in g.neighbors(u).filter(|&v| v > u) {
                for w in g.neighbors(v).filter(|&w| w > v) {
                    if g.has_edge(u, w) {
                        triangles.push((u, v, w));
                    }
                }
            }
        }
        assert_eq!(triangles.len(), 1);
        let (a, b, c) = triangles[0];
        let tri = BTreeSet::from([a, b, c]);
        assert_eq!(tri, BTreeSet::from([ce.w, ce.w_prime, ce.v]));
        assert!(graph::basic_predicates(g).unwrap().is_block_graph);
    }

    #[test]
    fn tree_not_k_srig_structure() {
        let g = gen_tree_not_k_srig(4).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.m(), g.n() - 1);
        // two G_4, two G_3, two G_2 plus centers and connectors
        let expected = 2 * (g_size(4) + g_size(3) + g_size(2)) + 3 * 3 + 4;
        assert_eq!(g.n(), expected);
        assert!(gen_tree_not_k_srig(3).is_err());
    }

    #[test]
    fn gap_tree_k4_validates() {
        let (g, rep) = gen_gap_tree(4).unwrap();
        let expected = (2 * d_size(4) + 3) + (2 * d_size(3) + 3) + d_size(2) + 4;
        assert_eq!(g.n(), expected);
        assert_eq!(rep.rects.len(), g.n());
        let report = validate(&rep, &g, StabMode::Srig).unwrap();
        assert!(report.valid, "{report:?}");
        let sweep = validate_with_engine(&rep, &g, StabMode::Srig, Engine::Sweep).unwrap();
        assert!(sweep.valid);
        // the level-k path rides the bottom line
        let bottom = &rep.stabs[0];
        for lbl in ["Hk.z", "Hk.pL", "Hk.pR", "Hk.L.u", "Hk.R.u"] {
            assert!(rep.rects[lbl].stabbed_by(bottom), "{lbl}");
        }
        assert!(gen_gap_tree(3).is_err());
    }

    #[test]
    fn lower_bound_chains_verify() {
        for l in 2..=4 {
            let tree = gen_g(l).unwrap();
            let cert = g_lower_bound_cert(l).unwrap();
            assert_eq!(verify_lower_bound_cert(&tree.graph, &cert), Some(l), "l={l}");
        }
        // tampering breaks it: swap one member set with an interval subtree
        let tree = gen_g(3).unwrap();
        let cert = g_lower_bound_cert(3).unwrap();
        if let StabLowerBoundCert::AsteroidalSubgraphs { mut members } = cert {
            members[0].0 = BTreeSet::from(["t1.u".to_string()]);
            let bad = StabLowerBoundCert::AsteroidalSubgraphs { members };
            assert_eq!(verify_lower_bound_cert(&tree.graph, &bad), None);
        } else {
            panic!("expected subgraph certificate at l=3");
        }
    }
}
