//! Standard inverse semigroups used throughout the corpus.

use thiserror::Error;

use super::{FiniteSemigroup, InverseSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("parameter must be at least 1")]
    ZeroSize,
    #[error("symmetric inverse monoid on {0} points exceeds the size limit of 4")]
    SizeLimit(usize),
    #[error("expected a group")]
    NotAGroup,
}

fn finish(base: Result<FiniteSemigroup, super::SemigroupError>) -> InverseSemigroup {
    // builders only tabulate known inverse semigroups
    let base = base.expect("builder produced a non-associative table");
    InverseSemigroup::new(base).expect("builder produced a non-inverse table")
}

/// The one-element group.
pub fn trivial_group() -> InverseSemigroup {
    cyclic_group(1).expect("n = 1 is valid")
}

/// `Z/n` with elements `e, g, g2, ..., g{n-1}`.
pub fn cyclic_group(n: usize) -> Result<InverseSemigroup, BuildError> {
    if n == 0 {
        return Err(BuildError::ZeroSize);
    }
    let names = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{k}"),
        })
        .collect();
    Ok(finish(FiniteSemigroup::from_fn(names, |a, b| (a + b) % n)))
}

/// The chain `e0 > e1 > ... > e{n-1}` with meet as product.
pub fn chain_semilattice(n: usize) -> Result<InverseSemigroup, BuildError> {
    if n == 0 {
        return Err(BuildError::ZeroSize);
    }
    let names = (0..n).map(|k| format!("e{k}")).collect();
    Ok(finish(FiniteSemigroup::from_fn(names, |a, b| a.max(b))))
}

fn require_group(g: &InverseSemigroup) -> Result<(), BuildError> {
    if g.idempotent_list().len() == 1 && g.elements().all(|s| g.dom(s) == g.dom(0)) {
        Ok(())
    } else {
        Err(BuildError::NotAGroup)
    }
}

/// The Brandt semigroup `B(G, k)`: triples `(i, g, j)` with `1 <= i, j <= k`
/// plus a zero, multiplied by `(i,g,j)(l,h,m) = (i,gh,m)` if `j = l` and `0`
/// otherwise. Triples are ordered lexicographically, the zero comes last.
/// For the trivial group the labels drop the group component: `(i,j)`.
pub fn brandt(group: &InverseSemigroup, k: usize) -> Result<InverseSemigroup, BuildError> {
    if k == 0 {
        return Err(BuildError::ZeroSize);
    }
    require_group(group)?;
    let g = group.order();
    let zero = k * k * g;
    let decode = |x: usize| (x / (g * k), (x / k) % g, x % k);
    let mut names = Vec::with_capacity(zero + 1);
    for x in 0..zero {
        let (i, a, j) = decode(x);
        if g == 1 {
            names.push(format!("({},{})", i + 1, j + 1));
        } else {
            names.push(format!("({},{},{})", i + 1, group.name(a), j + 1));
        }
    }
    names.push("0".to_string());
    Ok(finish(FiniteSemigroup::from_fn(names, |x, y| {
        if x == zero || y == zero {
            return zero;
        }
        let (i, a, j) = decode(x);
        let (l, b, m) = decode(y);
        if j != l {
            zero
        } else {
            (i * g + group.mul(a, b)) * k + m
        }
    })))
}

/// `G` with an adjoined zero, labelled `0` and placed last.
pub fn group_with_zero(group: &InverseSemigroup) -> Result<InverseSemigroup, BuildError> {
    require_group(group)?;
    let n = group.order();
    let mut names: Vec<String> = group.names().to_vec();
    names.push("0".to_string());
    Ok(finish(FiniteSemigroup::from_fn(names, |a, b| {
        if a == n || b == n {
            n
        } else {
            group.mul(a, b)
        }
    })))
}

/// All partial injections of `{0, .., n-1}` composed left to right
/// (`x(st) = (xs)t`). Elements are ordered lexicographically by (domain as a
/// sorted list, image tuple). A label lists the image of each point, `x` for
/// undefined: `p1x` sends 0 to 1 and is undefined at 1.
pub fn symmetric_inverse_monoid(n: usize) -> Result<InverseSemigroup, BuildError> {
    if n == 0 {
        return Err(BuildError::ZeroSize);
    }
    if n > 4 {
        return Err(BuildError::SizeLimit(n));
    }
    let mut maps: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for mask in 0u32..(1 << n) {
        let domain: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let mut images = Vec::new();
        injections(&domain, n, &mut Vec::new(), &mut images);
        for image in images {
            maps.push((domain.clone(), image));
        }
    }
    maps.sort();
    let as_fn: Vec<Vec<Option<usize>>> = maps
        .iter()
        .map(|(dom, img)| {
            let mut f = vec![None; n];
            for (&d, &i) in dom.iter().zip(img) {
                f[d] = Some(i);
            }
            f
        })
        .collect();
    let names = as_fn
        .iter()
        .map(|f| {
            let body: String = f
                .iter()
                .map(|v| match v {
                    Some(i) => char::from_digit(*i as u32, 10).unwrap(),
                    None => 'x',
                })
                .collect();
            format!("p{body}")
        })
        .collect();
    Ok(finish(FiniteSemigroup::from_fn(names, |a, b| {
        let composite: Vec<Option<usize>> = (0..n)
            .map(|p| as_fn[a][p].and_then(|q| as_fn[b][q]))
            .collect();
        as_fn
            .iter()
            .position(|f| *f == composite)
            .expect("partial injections are closed under composition")
    })))
}

fn injections(domain: &[usize], n: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == domain.len() {
        out.push(current.clone());
        return;
    }
    for v in 0..n {
        if !current.contains(&v) {
            current.push(v);
            injections(domain, n, current, out);
            current.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(chain_semilattice(1).unwrap().order(), 1);
        assert_eq!(symmetric_inverse_monoid(1).unwrap().order(), 2);
        // 1 + 2*2 + 2 partial injections of a 2-point set
        assert_eq!(symmetric_inverse_monoid(2).unwrap().order(), 7);
        assert_eq!(symmetric_inverse_monoid(3).unwrap().order(), 34);
        let b = brandt(&trivial_group(), 2).unwrap();
        assert_eq!(b.order(), 5);
        assert_eq!(b.idempotents().len(), 3);
        let c2 = cyclic_group(2).unwrap();
        let bc2 = brandt(&c2, 2).unwrap();
        assert_eq!(bc2.order(), 9);
        assert_eq!(group_with_zero(&c2).unwrap().order(), 3);
    }

    #[test]
    fn sim_ordering_is_lexicographic() {
        let sim = symmetric_inverse_monoid(2).unwrap();
        let names: Vec<&str> = sim.elements().map(|e| sim.name(e)).collect();
        assert_eq!(names, vec!["pxx", "p0x", "p1x", "p01", "p10", "px0", "px1"]);
    }

    #[test]
    fn errors() {
        assert_eq!(symmetric_inverse_monoid(5), Err(BuildError::SizeLimit(5)));
        assert_eq!(cyclic_group(0), Err(BuildError::ZeroSize));
        let chain = chain_semilattice(2).unwrap();
        assert_eq!(brandt(&chain, 2), Err(BuildError::NotAGroup));
    }
}
