//! Planar (non-crossing) string diagrams between two rows of boundary points.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A boundary point, 1-based from the left of its row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    Top(usize),
    Bottom(usize),
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Top(i) => write!(f, "t{i}"),
            Endpoint::Bottom(i) => write!(f, "b{i}"),
        }
    }
}

impl FromStr for Endpoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad endpoint `{s}`"));
        let (tag, rest) = s.split_at_checked(1).ok_or_else(bad)?;
        let i: usize = rest.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match tag {
            "t" => Ok(Endpoint::Top(i)),
            "b" => Ok(Endpoint::Bottom(i)),
            _ => Err(bad()),
        }
    }
}

/// What a matched pair of endpoints is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagramKind {
    /// Joins two top points.
    Cup,
    /// Joins two bottom points.
    Cap,
    /// Joins a top point to a bottom point.
    Throughline,
}

/// A non-crossing perfect matching of `n_top` top points and `n_bottom`
/// bottom points.
///
/// Internally every point has a position (top `i` is `i-1`, bottom `j` is
/// `n_top + j - 1`) and `link[p]` is the position of its partner. The derived
/// ordering agrees with lexicographic order on `(n_top, n_bottom, pairs())`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarDiagram {
    n_top: u16,
    n_bottom: u16,
    link: Vec<u16>,
}

/// Result of stacking two diagrams: the diagram with closed loops removed,
/// and how many loops were removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composite {
    pub loops: usize,
    pub diagram: PlanarDiagram,
}

impl PlanarDiagram {
    /// Build from a list of matched pairs, validating that every point is
    /// used once and that the matching is planar.
    pub fn from_pairs(n_top: usize, n_bottom: usize, pairs: &[(Endpoint, Endpoint)]) -> Result<Self> {
        let total = n_top + n_bottom;
        if total % 2 == 1 {
            return Err(Error::InvalidDiagram(format!("{n_top} + {n_bottom} boundary points is odd")));
        }
        if total > u16::MAX as usize {
            return Err(Error::InvalidDiagram("too many boundary points".into()));
        }
        let mut link = vec![u16::MAX; total];
        let pos = |e: Endpoint| -> Result<usize> {
            match e {
                Endpoint::Top(i) if (1..=n_top).contains(&i) => Ok(i - 1),
                Endpoint::Bottom(j) if (1..=n_bottom).contains(&j) => Ok(n_top + j - 1),
                _ => Err(Error::InvalidDiagram(format!("endpoint {e} out of range"))),
            }
        };
        for &(a, b) in pairs {
            let (p, q) = (pos(a)?, pos(b)?);
            if p == q || link[p] != u16::MAX || link[q] != u16::MAX {
                return Err(Error::InvalidDiagram(format!("endpoint used twice in {a}-{b}")));
            }
            link[p] = q as u16;
            link[q] = p as u16;
        }
        if link.iter().any(|&l| l == u16::MAX) {
            return Err(Error::InvalidDiagram("unmatched endpoint".into()));
        }
        let d = PlanarDiagram { n_top: n_top as u16, n_bottom: n_bottom as u16, link };
        if !d.is_planar() {
            return Err(Error::InvalidDiagram("matching is not planar".into()));
        }
        Ok(d)
    }

    fn from_link_unchecked(n_top: usize, n_bottom: usize, link: Vec<u16>) -> Self {
        let d = PlanarDiagram { n_top: n_top as u16, n_bottom: n_bottom as u16, link };
        debug_assert!(d.is_planar());
        d
    }

    /// The identity diagram on `n` strands.
    pub fn identity(n: usize) -> Self {
        let link = (0..2 * n).map(|p| if p < n { (p + n) as u16 } else { (p - n) as u16 }).collect();
        Self::from_link_unchecked(n, n, link)
    }

    /// The generator on `n` strands joining top points `i, i+1` and bottom
    /// points `i, i+1`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if n < 2 || i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, min: 1, max: n.saturating_sub(1) });
        }
        let mut link: Vec<u16> = Self::identity(n).link;
        let (a, b) = (i - 1, i);
        link[a] = b as u16;
        link[b] = a as u16;
        link[n + a] = (n + b) as u16;
        link[n + b] = (n + a) as u16;
        Ok(Self::from_link_unchecked(n, n, link))
    }

    /// The `(m, m-2)` diagram joining top points `i+1, i+2` with a cup and
    /// carrying every other top point straight down.
    pub fn cup_insertion(m: usize, i: usize) -> Result<Self> {
        if m < 2 || i + 2 > m {
            return Err(Error::IndexOutOfRange { index: i, min: 0, max: m.saturating_sub(2) });
        }
        let mut pairs = vec![(Endpoint::Top(i + 1), Endpoint::Top(i + 2))];
        let mut b = 1;
        for t in 1..=m {
            if t == i + 1 || t == i + 2 {
                continue;
            }
            pairs.push((Endpoint::Top(t), Endpoint::Bottom(b)));
            b += 1;
        }
        Self::from_pairs(m, m - 2, &pairs)
    }

    pub fn n_top(&self) -> usize {
        self.n_top as usize
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom as usize
    }

    fn endpoint(&self, p: usize) -> Endpoint {
        let nt = self.n_top();
        if p < nt {
            Endpoint::Top(p + 1)
        } else {
            Endpoint::Bottom(p - nt + 1)
        }
    }

    fn position(&self, e: Endpoint) -> usize {
        match e {
            Endpoint::Top(i) => i - 1,
            Endpoint::Bottom(j) => self.n_top() + j - 1,
        }
    }

    /// Partner of a boundary point.
    pub fn partner(&self, e: Endpoint) -> Endpoint {
        self.endpoint(self.link[self.position(e)] as usize)
    }

    /// Canonical sorted list of pairs, each written smaller endpoint first.
    pub fn pairs(&self) -> Vec<(Endpoint, Endpoint)> {
        (0..self.link.len())
            .filter(|&p| (self.link[p] as usize) > p)
            .map(|p| (self.endpoint(p), self.endpoint(self.link[p] as usize)))
            .collect()
    }

    pub fn kind(a: Endpoint, b: Endpoint) -> DiagramKind {
        match (a, b) {
            (Endpoint::Top(_), Endpoint::Top(_)) => DiagramKind::Cup,
            (Endpoint::Bottom(_), Endpoint::Bottom(_)) => DiagramKind::Cap,
            _ => DiagramKind::Throughline,
        }
    }

    pub fn count(&self, kind: DiagramKind) -> usize {
        self.pairs().into_iter().filter(|&(a, b)| Self::kind(a, b) == kind).count()
    }

    pub fn num_throughlines(&self) -> usize {
        let nt = self.n_top();
        (0..nt).filter(|&p| self.link[p] as usize >= nt).count()
    }

    pub fn num_cups(&self) -> usize {
        (self.n_top() - self.num_throughlines()) / 2
    }

    pub fn num_caps(&self) -> usize {
        (self.n_bottom() - self.num_throughlines()) / 2
    }

    /// No caps.
    pub fn is_monic(&self) -> bool {
        self.num_caps() == 0
    }

    /// Cups as 1-based top index pairs `(i, j)`, `i < j`, sorted.
    pub fn cups(&self) -> Vec<(usize, usize)> {
        let nt = self.n_top();
        (0..nt)
            .filter(|&p| {
                let q = self.link[p] as usize;
                q < nt && q > p
            })
            .map(|p| (p + 1, self.link[p] as usize + 1))
            .collect()
    }

    /// Caps as 1-based bottom index pairs `(i, j)`, `i < j`, sorted.
    pub fn caps(&self) -> Vec<(usize, usize)> {
        let nt = self.n_top();
        (nt..self.link.len())
            .filter(|&p| self.link[p] as usize > p)
            .map(|p| (p - nt + 1, self.link[p] as usize - nt + 1))
            .collect()
    }

    /// Throughlines as `(top, bottom)` 1-based pairs, left to right.
    pub fn throughlines(&self) -> Vec<(usize, usize)> {
        let nt = self.n_top();
        (0..nt)
            .filter(|&p| self.link[p] as usize >= nt)
            .map(|p| (p + 1, self.link[p] as usize - nt + 1))
            .collect()
    }

    /// Index of a point along the boundary walk: top left to right, then
    /// bottom right to left.
    fn walk_index(&self, p: usize) -> usize {
        let nt = self.n_top();
        if p < nt {
            p
        } else {
            nt + (self.n_bottom() - 1 - (p - nt))
        }
    }

    /// Balanced-parentheses test along the boundary walk.
    fn is_planar(&self) -> bool {
        let total = self.link.len();
        let mut walk = vec![0usize; total];
        for p in 0..total {
            walk[self.walk_index(p)] = self.walk_index(self.link[p] as usize);
        }
        let mut stack = Vec::new();
        for (w, &partner) in walk.iter().enumerate() {
            if partner > w {
                stack.push(w);
            } else if stack.pop() != Some(partner) {
                return false;
            }
        }
        stack.is_empty()
    }

    /// Stack `self` on top of `lower`, gluing the bottom row of `self` to the
    /// top row of `lower`.
    pub fn compose(&self, lower: &PlanarDiagram) -> Result<Composite> {
        if self.n_bottom != lower.n_top {
            return Err(Error::BoundaryMismatch { upper_bottom: self.n_bottom(), lower_top: lower.n_top() });
        }
        let (a, b, c) = (self.n_top(), self.n_bottom(), lower.n_bottom());
        let up = |p: usize| self.link[p] as usize;
        let lo = |p: usize| lower.link[p] as usize;
        let mut link = vec![u16::MAX; a + c];
        let mut seen = vec![false; b];
        for start in 0..a + c {
            if link[start] != u16::MAX {
                continue;
            }
            // alternate between the two diagrams until a free end is reached
            let mut in_upper = start < a;
            let mut cur = if in_upper { up(start) } else { lo(b + start - a) };
            let end = loop {
                if in_upper {
                    if cur < a {
                        break cur;
                    }
                    let m = cur - a;
                    seen[m] = true;
                    cur = lo(m);
                    in_upper = false;
                } else {
                    if cur >= b {
                        break a + cur - b;
                    }
                    seen[cur] = true;
                    cur = up(a + cur);
                    in_upper = true;
                }
            };
            link[start] = end as u16;
            link[end] = start as u16;
        }
        let mut loops = 0;
        for m0 in 0..b {
            if seen[m0] {
                continue;
            }
            loops += 1;
            let mut m = m0;
            loop {
                seen[m] = true;
                let p = up(a + m) - a;
                seen[p] = true;
                m = lo(p);
                if m == m0 {
                    break;
                }
            }
        }
        Ok(Composite { loops, diagram: Self::from_link_unchecked(a, c, link) })
    }

    /// Swap the two rows.
    pub fn reflect(&self) -> Self {
        let (nt, nb) = (self.n_top(), self.n_bottom());
        let to_new = |p: usize| if p < nt { nb + p } else { p - nt };
        let mut link = vec![0u16; nt + nb];
        for p in 0..nt + nb {
            link[to_new(p)] = to_new(self.link[p] as usize) as u16;
        }
        Self::from_link_unchecked(nb, nt, link)
    }

    /// Join bottom points `i+1` and `i+2` with an extra cup placed below.
    pub fn insert_cup(&self, i: usize) -> Result<Composite> {
        let m = self.n_bottom();
        if m < 2 || i + 2 > m {
            return Err(Error::IndexOutOfRange { index: i, min: 0, max: m.saturating_sub(2) });
        }
        self.compose(&Self::cup_insertion(m, i)?)
    }

    /// Append one throughline joining the new rightmost top and bottom points.
    pub fn append_throughline(&self) -> Self {
        let (nt, nb) = (self.n_top(), self.n_bottom());
        let map = |p: usize| if p < nt { p } else { p + 1 };
        let mut link = vec![0u16; nt + nb + 2];
        for p in 0..nt + nb {
            link[map(p)] = map(self.link[p] as usize) as u16;
        }
        link[nt] = (nt + 1 + nb) as u16;
        link[nt + 1 + nb] = nt as u16;
        Self::from_link_unchecked(nt + 1, nb + 1, link)
    }

    /// ASCII drawing: cups hang from the top row, caps rise from the bottom
    /// row and throughlines jog sideways in between.
    pub fn render_ascii(&self) -> String {
        render::draw(self)
    }
}

/// All `(n_top, n_bottom)` diagrams in canonical order.
pub fn enumerate_diagrams(n_top: usize, n_bottom: usize) -> Vec<PlanarDiagram> {
    let total = n_top + n_bottom;
    if total % 2 == 1 {
        return Vec::new();
    }
    // positions in walk order back to row positions
    let from_walk = |w: usize| if w < n_top { w } else { n_top + (n_bottom - 1 - (w - n_top)) };
    let mut out = Vec::new();
    let mut walk_link = vec![0usize; total];
    let mut stack = Vec::new();
    fn rec(
        w: usize,
        total: usize,
        walk_link: &mut Vec<usize>,
        stack: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if w == total {
            emit(walk_link);
            return;
        }
        let remaining = total - w;
        if stack.len() < remaining {
            stack.push(w);
            rec(w + 1, total, walk_link, stack, emit);
            stack.pop();
        }
        if let Some(open) = stack.pop() {
            walk_link[open] = w;
            walk_link[w] = open;
            rec(w + 1, total, walk_link, stack, emit);
            stack.push(open);
        }
    }
    let mut emit = |wl: &[usize]| {
        let mut link = vec![0u16; total];
        for w in 0..total {
            link[from_walk(w)] = from_walk(wl[w]) as u16;
        }
        out.push(PlanarDiagram::from_link_unchecked(n_top, n_bottom, link));
    };
    rec(0, total, &mut walk_link, &mut stack, &mut emit);
    out.sort();
    out
}

/// Basis of the diagram algebra on `n` strands: all `(n, n)` diagrams.
pub fn enumerate_tl_basis(n: usize) -> Vec<PlanarDiagram> {
    enumerate_diagrams(n, n)
}

/// All `(n, ℓ)` diagrams without caps, in canonical order.
pub fn enumerate_monic_basis(n: usize, l: usize) -> Result<Vec<PlanarDiagram>> {
    if l > n || (n - l) % 2 == 1 {
        return Err(Error::Parity { n, through: l });
    }
    let mut out = Vec::new();
    let mut link = vec![0u16; n + l];
    let mut stack = Vec::new();
    fn rec(
        t: usize,
        n: usize,
        l: usize,
        placed_through: usize,
        link: &mut Vec<u16>,
        stack: &mut Vec<usize>,
        out: &mut Vec<PlanarDiagram>,
    ) {
        if t == n {
            if stack.is_empty() && placed_through == l {
                out.push(PlanarDiagram::from_link_unchecked(n, l, link.clone()));
            }
            return;
        }
        let remaining = n - t;
        let need_through = l - placed_through;
        // a throughline is only allowed outside every open cup
        if stack.is_empty() && need_through > 0 {
            link[t] = (n + placed_through) as u16;
            link[n + placed_through] = t as u16;
            rec(t + 1, n, l, placed_through + 1, link, stack, out);
        }
        if stack.len() + need_through < remaining {
            stack.push(t);
            rec(t + 1, n, l, placed_through, link, stack, out);
            stack.pop();
        }
        if let Some(open) = stack.pop() {
            link[open] = t as u16;
            link[t] = open as u16;
            rec(t + 1, n, l, placed_through, link, stack, out);
            stack.push(open);
        }
    }
    rec(0, n, l, 0, &mut link, &mut stack, &mut out);
    out.sort();
    Ok(out)
}

/// `C(n, k)` as u128 (zero when `k > n`).
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `C(n, (n-ℓ)/2) − C(n, (n-ℓ)/2 − 1)`, zero outside the valid range.
pub fn standard_dim(n: usize, l: usize) -> usize {
    if l > n || (n - l) % 2 == 1 {
        return 0;
    }
    let k = (n - l) / 2;
    let below = if k == 0 { 0 } else { binomial(n, k - 1) };
    (binomial(n, k) - below) as usize
}

/// The `n`th Catalan number.
pub fn catalan(n: usize) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{}:{}:[{}]", self.n_top, self.n_bottom, pairs.join(","))
    }
}

impl fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PlanarDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad diagram `{s}`"));
        let mut parts = s.trim().splitn(3, ':');
        let nt: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let nb: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let body = parts.next().ok_or_else(bad)?.trim();
        let inner = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(bad)?;
        let mut pairs = Vec::new();
        for item in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = item.split_once('-').ok_or_else(bad)?;
            pairs.push((a.parse()?, b.parse()?));
        }
        PlanarDiagram::from_pairs(nt, nb, &pairs)
    }
}

impl Serialize for PlanarDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PlanarDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

mod render {
    use super::PlanarDiagram;

    fn put(grid: &mut [Vec<char>], r: usize, c: usize, ch: char) {
        grid[r][c] = ch;
    }

    /// Height of each arc: one more than the tallest arc nested inside it.
    fn heights(arcs: &[(usize, usize)]) -> Vec<usize> {
        let mut h = vec![0; arcs.len()];
        let mut order: Vec<usize> = (0..arcs.len()).collect();
        order.sort_by_key(|&k| arcs[k].1 - arcs[k].0);
        for &k in &order {
            let (a, b) = arcs[k];
            let inner = order
                .iter()
                .filter(|&&j| j != k && arcs[j].0 > a && arcs[j].1 < b)
                .map(|&j| h[j])
                .max()
                .unwrap_or(0);
            h[k] = inner + 1;
        }
        h
    }

    pub fn draw(d: &PlanarDiagram) -> String {
        let cups = d.cups();
        let caps = d.caps();
        let through = d.throughlines();
        let width = 2 * d.n_top().max(d.n_bottom()).max(1) - 1;
        let hc = heights(&cups);
        let hp = heights(&caps);
        let top_band = hc.iter().copied().max().unwrap_or(0);
        let bot_band = hp.iter().copied().max().unwrap_or(0);
        let col = |i: usize| 2 * (i - 1);
        // columns of every throughline as it descends
        let mut cur: Vec<usize> = through.iter().map(|&(t, _)| col(t)).collect();
        let target: Vec<usize> = through.iter().map(|&(_, b)| col(b)).collect();
        let mut moves: Vec<usize> = (0..through.len()).filter(|&k| target[k] < cur[k]).collect();
        let mut right: Vec<usize> = (0..through.len()).filter(|&k| target[k] > cur[k]).collect();
        right.reverse();
        moves.extend(right);
        let mid_band = moves.len().max(usize::from(!through.is_empty()));
        let rows = 2 + top_band + mid_band + bot_band;
        let mut grid = vec![vec![' '; width]; rows];
        for i in 1..=d.n_top() {
            put(&mut grid, 0, col(i), 'o');
        }
        for j in 1..=d.n_bottom() {
            put(&mut grid, rows - 1, col(j), 'o');
        }
        for (k, &(a, b)) in cups.iter().enumerate() {
            let r = hc[k];
            for rr in 1..r {
                put(&mut grid, rr, col(a), '|');
                put(&mut grid, rr, col(b), '|');
            }
            put(&mut grid, r, col(a), '+');
            put(&mut grid, r, col(b), '+');
            for c in col(a) + 1..col(b) {
                put(&mut grid, r, c, '-');
            }
        }
        for (k, &(a, b)) in caps.iter().enumerate() {
            let r = rows - 1 - hp[k];
            for rr in r + 1..rows - 1 {
                put(&mut grid, rr, col(a), '|');
                put(&mut grid, rr, col(b), '|');
            }
            put(&mut grid, r, col(a), '+');
            put(&mut grid, r, col(b), '+');
            for c in col(a) + 1..col(b) {
                put(&mut grid, r, c, '-');
            }
        }
        for r in 1..=top_band {
            for &c in &cur {
                put(&mut grid, r, c, '|');
            }
        }
        for m in 0..mid_band {
            let r = 1 + top_band + m;
            let mover = moves.get(m).copied();
            for (k, &c) in cur.iter().enumerate() {
                if Some(k) != mover {
                    put(&mut grid, r, c, '|');
                }
            }
            if let Some(k) = mover {
                let (lo, hi) = (cur[k].min(target[k]), cur[k].max(target[k]));
                for c in lo..=hi {
                    put(&mut grid, r, c, '-');
                }
                put(&mut grid, r, lo, '+');
                put(&mut grid, r, hi, '+');
                cur[k] = target[k];
            }
        }
        for r in rows - 1 - bot_band..rows - 1 {
            for &c in &cur {
                put(&mut grid, r, c, '|');
            }
        }
        grid.iter()
            .map(|row| row.iter().collect::<String>().trim_end().to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> PlanarDiagram {
        PlanarDiagram::generator(n, i).unwrap()
    }

    fn product(ds: &[PlanarDiagram]) -> Composite {
        let mut acc = Composite { loops: 0, diagram: PlanarDiagram::identity(ds[0].n_top()) };
        for d in ds {
            let c = acc.diagram.compose(d).unwrap();
            acc = Composite { loops: acc.loops + c.loops, diagram: c.diagram };
        }
        acc
    }

    #[test]
    fn generators() {
        assert_eq!(e(2, 1).to_string(), "2:2:[t1-t2,b1-b2]");
        let g = e(5, 3);
        assert_eq!(g.throughlines(), vec![(1, 1), (2, 2), (5, 5)]);
        assert_eq!(g.cups(), vec![(3, 4)]);
        assert_eq!(g.caps(), vec![(3, 4)]);
        assert_eq!(
            PlanarDiagram::generator(4, 4).unwrap_err(),
            Error::IndexOutOfRange { index: 4, min: 1, max: 3 }
        );
    }

    #[test]
    fn five_fold_product_has_one_loop() {
        let c = product(&[e(5, 1), e(5, 3), e(5, 2), e(5, 1), e(5, 3)]);
        assert_eq!(c.loops, 1);
        assert_eq!(c.diagram, product(&[e(5, 1), e(5, 3)]).diagram);
        let sq = e(2, 1).compose(&e(2, 1)).unwrap();
        assert_eq!(sq, Composite { loops: 1, diagram: e(2, 1) });
    }

    #[test]
    fn identity_is_neutral() {
        for d in enumerate_tl_basis(4) {
            let c = PlanarDiagram::identity(4).compose(&d).unwrap();
            assert_eq!(c, Composite { loops: 0, diagram: d.clone() });
            let c = d.compose(&PlanarDiagram::identity(4)).unwrap();
            assert_eq!(c, Composite { loops: 0, diagram: d });
        }
    }

    #[test]
    fn mismatch() {
        let err = e(3, 1).compose(&e(4, 1)).unwrap_err();
        assert_eq!(err, Error::BoundaryMismatch { upper_bottom: 3, lower_top: 4 });
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_tl_basis(3).len(), 5);
        assert_eq!(enumerate_tl_basis(4).len(), 14);
        assert_eq!(enumerate_monic_basis(6, 2).unwrap().len(), 9);
        assert_eq!(enumerate_monic_basis(4, 4).unwrap(), vec![PlanarDiagram::identity(4)]);
        assert_eq!(enumerate_monic_basis(4, 2).unwrap().len(), 3);
        assert_eq!(enumerate_monic_basis(5, 2).unwrap_err(), Error::Parity { n: 5, through: 2 });
    }

    #[test]
    fn reflect_shapes() {
        let x = &enumerate_monic_basis(6, 2).unwrap()[0];
        let r = x.reflect();
        assert_eq!((r.n_top(), r.n_bottom()), (2, 6));
        assert_eq!(r.reflect(), *x);
        assert_eq!(e(4, 2).reflect(), e(4, 2));
        assert_eq!(PlanarDiagram::identity(3).reflect(), PlanarDiagram::identity(3));
    }

    #[test]
    fn insert_cup_examples() {
        let c = PlanarDiagram::identity(2).insert_cup(0).unwrap();
        assert_eq!(c.loops, 0);
        assert_eq!(c.diagram.to_string(), "2:0:[t1-t2]");
        let x: PlanarDiagram = "4:4:[t1-b1,t2-b2,t3-b3,t4-b4]".parse().unwrap();
        let y = x.insert_cup(1).unwrap().diagram;
        assert_eq!(y.num_throughlines(), 2);
        assert!(PlanarDiagram::identity(2).insert_cup(1).is_err());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!("2:2:[t1-b2,t2-b1]".parse::<PlanarDiagram>().is_err());
        assert!("2:0:[t1-t1]".parse::<PlanarDiagram>().is_err());
        assert!("2:0:[]".parse::<PlanarDiagram>().is_err());
        assert!("3:0:[t1-t2]".parse::<PlanarDiagram>().is_err());
        assert!("2:0:[t1-t3]".parse::<PlanarDiagram>().is_err());
        assert!("0:0:[]".parse::<PlanarDiagram>().is_ok());
        let d: PlanarDiagram = "2:2:[b2-b1, t2-t1]".parse().unwrap();
        assert_eq!(d, e(2, 1));
    }

    #[test]
    fn drawing() {
        let pic = e(3, 1).render_ascii();
        assert_eq!(pic, "o o o\n+-+ |\n    |\n+-+ |\no o o");
        let x: PlanarDiagram = "4:2:[t1-b1,t2-t3,t4-b2]".parse().unwrap();
        assert_eq!(x.render_ascii(), "o o o o\n| +-+ |\n| +---+\no o");
    }
}
