use std::collections::HashMap;
use std::hash::Hash;

use crate::arith::lcm;
use crate::error::{Error, Result};

/// A cyclic group of order `order` acting on a finite set through a generator.
///
/// The generator is compiled into a permutation of element indices at
/// construction, after checking that it is a bijection of the set whose
/// `order`-th power is the identity.
#[derive(Debug, Clone)]
pub struct CyclicAction<E> {
    elements: Vec<E>,
    image: Vec<usize>,
    period: Vec<usize>,
    order: usize,
}

impl<E: Eq + Hash> CyclicAction<E> {
    pub fn new(elements: Vec<E>, order: usize, step: impl Fn(&E) -> E) -> Result<Self> {
        let index: HashMap<&E, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        if index.len() != elements.len() {
            return Err(Error::domain("action elements must be distinct"));
        }
        let image = elements
            .iter()
            .map(|e| {
                index
                    .get(&step(e))
                    .copied()
                    .ok_or_else(|| Error::domain("generator maps an element outside the set"))
            })
            .collect::<Result<Vec<_>>>()?;
        drop(index);
        Self::from_permutation(elements, order, image)
    }
}

impl<E> CyclicAction<E> {
    fn from_permutation(elements: Vec<E>, order: usize, image: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::domain("group order must be positive"));
        }
        let mut hit = vec![false; image.len()];
        for &j in &image {
            if std::mem::replace(&mut hit[j], true) {
                return Err(Error::domain("generator is not injective"));
            }
        }
        let mut period = vec![0; image.len()];
        for start in 0..image.len() {
            if period[start] != 0 {
                continue;
            }
            let mut cycle = vec![start];
            let mut cur = image[start];
            while cur != start {
                cycle.push(cur);
                cur = image[cur];
            }
            if order % cycle.len() != 0 {
                return Err(Error::domain(format!(
                    "orbit of size {} does not divide the group order {order}",
                    cycle.len()
                )));
            }
            for &i in &cycle {
                period[i] = cycle.len();
            }
        }
        Ok(CyclicAction {
            elements,
            image,
            period,
            order,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    /// Index of the image of element `i` under the generator.
    pub fn step_index(&self, i: usize) -> usize {
        self.image[i]
    }

    /// Size of the orbit through element `i`.
    pub fn period(&self, i: usize) -> usize {
        self.period[i]
    }

    /// `|{x : g^d x = x}|`; `d = 0` fixes everything.
    pub fn fixed_point_count(&self, d: usize) -> u64 {
        self.period.iter().filter(|&&p| d % p == 0).count() as u64
    }

    /// Orbit sizes with multiplicity, as `(size, count)` pairs in ascending size.
    pub fn orbit_sizes(&self) -> Vec<(usize, u64)> {
        let mut counts = std::collections::BTreeMap::new();
        for &p in &self.period {
            *counts.entry(p).or_insert(0u64) += 1;
        }
        counts.into_iter().map(|(p, c)| (p, c / p as u64)).collect()
    }
}

impl<E: Clone> CyclicAction<E> {
    /// The diagonal action `g (x, y) = (g x, g y)` on the Cartesian product.
    pub fn product<F: Clone>(&self, other: &CyclicAction<F>) -> Result<CyclicAction<(E, F)>> {
        if self.order != other.order {
            return Err(Error::domain(format!(
                "cannot combine actions of orders {} and {}",
                self.order, other.order
            )));
        }
        let nb = other.len();
        let mut elements = Vec::with_capacity(self.len() * nb);
        let mut image = Vec::with_capacity(self.len() * nb);
        let mut period = Vec::with_capacity(self.len() * nb);
        for (i, x) in self.elements.iter().enumerate() {
            for (j, y) in other.elements.iter().enumerate() {
                elements.push((x.clone(), y.clone()));
                image.push(self.image[i] * nb + other.image[j]);
                period.push(lcm(self.period[i], other.period[j]));
            }
        }
        Ok(CyclicAction {
            elements,
            image,
            period,
            order: self.order,
        })
    }
}
