use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::cartan::{CartanMatrix, Q64};
use super::weight::{Weight, WeightMultiset};
use crate::error::{Error, Result};

/// Dominant part of an irreducible character: dominant weights with their
/// multiplicities, highest first.
#[derive(Debug)]
pub struct DominantCharacter {
    pub highest: Weight,
    pub weights: Vec<(Weight, i64)>,
}

type TermList = Arc<Vec<(Weight, i64)>>;

/// Positive roots, Weyl vector, reflections and an integer-scaled inner
/// product for one finite-type Cartan matrix, plus memo tables for the
/// character computations built on top of it.
pub struct RootSystem {
    cartan: CartanMatrix,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    positive_root_coords: Vec<Vec<i32>>,
    rho: Weight,
    gram: Vec<i64>,
    height_form: Vec<i64>,
    dominant_cache: RwLock<HashMap<Weight, Arc<DominantCharacter>>>,
    diagram_cache: RwLock<HashMap<Weight, TermList>>,
    pub(crate) tensor_cache: RwLock<HashMap<(Weight, Weight), TermList>>,
    pub(crate) adams_cache: RwLock<HashMap<(Weight, u32), TermList>>,
}

impl std::fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RootSystem")
            .field("cartan", &self.cartan)
            .field("positive_roots", &self.positive_roots.len())
            .finish()
    }
}

fn lcm_of_denominators<'a>(xs: impl Iterator<Item = &'a Q64>) -> i64 {
    xs.fold(1i64, |acc, x| acc.lcm(x.denom()))
}

impl RootSystem {
    pub fn new(cartan: CartanMatrix) -> Result<Arc<Self>> {
        let r = cartan.rank();
        let simple_roots: Vec<Weight> = (0..r)
            .map(|j| Weight::new(&(0..r).map(|i| cartan.get(i, j)).collect::<Vec<_>>()))
            .collect();

        // Closure of the simple roots under simple reflections, in root coordinates.
        let labels_of = |c: &[i32]| -> Vec<i32> {
            (0..r).map(|i| (0..r).map(|k| cartan.get(i, k) * c[k]).sum()).collect()
        };
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        for j in 0..r {
            let mut c = vec![0; r];
            c[j] = 1;
            seen.insert(c.clone());
            queue.push_back(c);
        }
        const ROOT_LIMIT: usize = 100_000;
        while let Some(c) = queue.pop_front() {
            let lab = labels_of(&c);
            for i in 0..r {
                let mut s = c.clone();
                s[i] -= lab[i];
                if seen.insert(s.clone()) {
                    if seen.len() > ROOT_LIMIT {
                        return Err(Error::InvalidCartan("root system is not finite".into()));
                    }
                    queue.push_back(s);
                }
            }
        }
        let mut positive_root_coords: Vec<Vec<i32>> =
            seen.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        positive_root_coords.sort_by_key(|c| (c.iter().sum::<i32>(), c.clone()));
        let positive_roots = positive_root_coords.iter().map(|c| Weight::new(&labels_of(c))).collect();

        let inv = cartan.inverse();
        let d = cartan.symmetrizer()?;
        let gram_q: Vec<Q64> = (0..r)
            .flat_map(|i| (0..r).map(move |k| (i, k)))
            .map(|(i, k)| inv[i][k] * d[i])
            .collect();
        let scale = lcm_of_denominators(gram_q.iter());
        let gram = gram_q.iter().map(|x| (x * scale).to_integer()).collect();

        let height_q: Vec<Q64> = (0..r).map(|i| (0..r).map(|k| inv[k][i]).sum()).collect();
        let hscale = lcm_of_denominators(height_q.iter());
        let height_form = height_q.iter().map(|x| (x * hscale).to_integer()).collect();

        Ok(Arc::new(RootSystem {
            rho: Weight::new(&vec![1; r]),
            cartan,
            simple_roots,
            positive_roots,
            positive_root_coords,
            gram,
            height_form,
            dominant_cache: RwLock::new(HashMap::new()),
            diagram_cache: RwLock::new(HashMap::new()),
            tensor_cache: RwLock::new(HashMap::new()),
            adams_cache: RwLock::new(HashMap::new()),
        }))
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Positive roots as nonnegative integer combinations of simple roots.
    pub fn positive_root_coordinates(&self) -> &[Vec<i32>] {
        &self.positive_root_coords
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch { weight: w.to_string(), got: w.rank(), rank: self.rank() });
        }
        Ok(())
    }

    fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_rank(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(())
    }

    /// Inner product scaled by a fixed positive integer so it is integral.
    pub fn inner(&self, a: &Weight, b: &Weight) -> i64 {
        let r = self.rank();
        let (a, b) = (a.labels(), b.labels());
        let mut s = 0i64;
        for i in 0..r {
            if a[i] == 0 {
                continue;
            }
            for k in 0..r {
                s += self.gram[i * r + k] * a[i] as i64 * b[k] as i64;
            }
        }
        s
    }

    /// Height (sum of simple-root coordinates), scaled to an integer.
    pub fn height(&self, w: &Weight) -> i64 {
        w.labels().iter().zip(&self.height_form).map(|(&a, &h)| a as i64 * h).sum()
    }

    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let k = w.labels()[i];
        let mut out = w.clone();
        if k != 0 {
            for (o, s) in out.labels_mut().iter_mut().zip(self.simple_roots[i].labels()) {
                *o -= k * s;
            }
        }
        out
    }

    /// Dominant representative of the Weyl orbit of `w`, with the parity of
    /// the number of reflections used.
    pub fn to_dominant(&self, w: &Weight) -> (Weight, bool) {
        let mut cur = w.clone();
        let mut odd = false;
        while let Some(i) = cur.labels().iter().position(|&a| a < 0) {
            cur = self.reflect(&cur, i);
            odd = !odd;
        }
        (cur, odd)
    }

    /// Dot-action straightening: returns `(w', sign)` with `w' + rho`
    /// dominant regular and `w + rho = sign * u(w' + rho)`, or `None` when
    /// `w + rho` lies on a wall.
    pub fn straighten(&self, w: &Weight) -> Option<(Weight, i32)> {
        let shifted = w + &self.rho;
        let (dom, odd) = self.to_dominant(&shifted);
        if dom.labels().iter().any(|&a| a == 0) {
            return None;
        }
        Some((&dom - &self.rho, if odd { -1 } else { 1 }))
    }

    pub fn weyl_orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut out = vec![w.clone()];
        seen.insert(w.clone());
        let mut idx = 0;
        while idx < out.len() {
            let cur = out[idx].clone();
            idx += 1;
            for i in 0..self.rank() {
                if cur.labels()[i] == 0 {
                    continue;
                }
                let s = self.reflect(&cur, i);
                if seen.insert(s.clone()) {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Weyl dimension formula.
    pub fn weyl_dim(&self, highest: &Weight) -> Result<BigInt> {
        self.check_dominant(highest)?;
        let shifted = highest + &self.rho;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in &self.positive_roots {
            num *= BigInt::from(self.inner(&shifted, alpha));
            den *= BigInt::from(self.inner(&self.rho, alpha));
        }
        let (q, rem) = num.div_rem(&den);
        if rem.is_positive() || rem.is_negative() {
            return Err(Error::NonIntegral(format!("Weyl dimension of {highest}")));
        }
        Ok(q)
    }

    /// Dominant weights of `V(highest)` with Freudenthal multiplicities.
    pub fn dominant_character(&self, highest: &Weight) -> Result<Arc<DominantCharacter>> {
        self.check_dominant(highest)?;
        if let Some(hit) = self.dominant_cache.read().unwrap().get(highest) {
            return Ok(hit.clone());
        }
        let ch = Arc::new(self.freudenthal(highest)?);
        self.dominant_cache.write().unwrap().entry(highest.clone()).or_insert_with(|| ch.clone());
        Ok(ch)
    }

    fn freudenthal(&self, highest: &Weight) -> Result<DominantCharacter> {
        // Every dominant weight below `highest` is reachable through dominant
        // weights by subtracting positive roots.
        let mut dominant: Vec<Weight> = vec![highest.clone()];
        let mut index: HashSet<Weight> = HashSet::from([highest.clone()]);
        let mut i = 0;
        while i < dominant.len() {
            let cur = dominant[i].clone();
            i += 1;
            for alpha in &self.positive_roots {
                let next = &cur - alpha;
                if next.is_dominant() && index.insert(next.clone()) {
                    dominant.push(next);
                }
            }
        }
        let top = self.height(highest);
        dominant.sort_by_key(|w| (top - self.height(w), std::cmp::Reverse(w.clone())));

        let shifted = highest + &self.rho;
        let norm_top = self.inner(&shifted, &shifted);
        let mut mult: HashMap<Weight, i64> = HashMap::with_capacity(dominant.len());
        mult.insert(highest.clone(), 1);
        let mut weights = Vec::with_capacity(dominant.len());
        weights.push((highest.clone(), 1));
        for mu in dominant.iter().skip(1) {
            let mut sum: i64 = 0;
            for alpha in &self.positive_roots {
                let mut step = mu + alpha;
                loop {
                    let (dom, _) = self.to_dominant(&step);
                    let Some(&m) = mult.get(&dom) else { break };
                    let term = m
                        .checked_mul(self.inner(&step, alpha))
                        .and_then(|t| sum.checked_add(t))
                        .ok_or_else(|| Error::Internal("weight multiplicity overflow".into()))?;
                    sum = term;
                    step = &step + alpha;
                }
            }
            let mu_shift = mu + &self.rho;
            let denom = norm_top - self.inner(&mu_shift, &mu_shift);
            let (m, rem) = (2 * sum).div_rem(&denom);
            if rem != 0 || denom <= 0 {
                return Err(Error::NonIntegral(format!("Freudenthal multiplicity of {mu} in {highest}")));
            }
            mult.insert(mu.clone(), m);
            if m != 0 {
                weights.push((mu.clone(), m));
            }
        }
        Ok(DominantCharacter { highest: highest.clone(), weights })
    }

    /// Full weight diagram of `V(highest)` as a flat list.
    pub(crate) fn weight_diagram(&self, highest: &Weight) -> Result<TermList> {
        if let Some(hit) = self.diagram_cache.read().unwrap().get(highest) {
            return Ok(hit.clone());
        }
        let ch = self.dominant_character(highest)?;
        let mut all = Vec::new();
        for (w, m) in &ch.weights {
            for u in self.weyl_orbit(w) {
                all.push((u, *m));
            }
        }
        all.sort();
        let all = Arc::new(all);
        self.diagram_cache.write().unwrap().entry(highest.clone()).or_insert_with(|| all.clone());
        Ok(all)
    }

    /// Full weight diagram with multiplicities.
    pub fn freudenthal_multiplicities(&self, highest: &Weight) -> Result<WeightMultiset> {
        Ok(self.weight_diagram(highest)?.iter().map(|(w, m)| (w.clone(), BigInt::from(*m))).collect())
    }

    /// Sort key refining the dominance order: larger keys first.
    pub(crate) fn peel_key(&self, w: &Weight) -> (i64, Weight) {
        (self.height(w), w.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> Arc<RootSystem> {
        RootSystem::new(CartanMatrix::a(n)).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(a(4).positive_roots().len(), 10);
        assert_eq!(a(1).positive_roots().len(), 1);
        let g2 = RootSystem::new(CartanMatrix::new(vec![vec![2, -1], vec![-3, 2]]).unwrap()).unwrap();
        assert_eq!(g2.positive_roots().len(), 6);
        let b3 = RootSystem::new(
            CartanMatrix::new(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]).unwrap(),
        )
        .unwrap();
        assert_eq!(b3.positive_roots().len(), 9);
    }

    #[test]
    fn simple_reflections_permute_other_positive_roots() {
        let rs = a(4);
        let pos: HashSet<Weight> = rs.positive_roots().iter().cloned().collect();
        for i in 0..4 {
            for alpha in rs.positive_roots() {
                let s = rs.reflect(alpha, i);
                if alpha == &rs.simple_roots()[i] {
                    assert_eq!(s, -alpha);
                } else {
                    assert!(pos.contains(&s));
                }
            }
        }
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        let rs = a(4);
        let mut sum = Weight::zero(4);
        for alpha in rs.positive_roots() {
            sum = &sum + alpha;
        }
        assert_eq!(sum, rs.rho().scaled(2));
    }

    #[test]
    fn weyl_dims_a4() {
        let rs = a(4);
        let dim = |s: &str| rs.weyl_dim(&s.parse().unwrap()).unwrap();
        assert_eq!(dim("0010"), 10.into());
        assert_eq!(dim("0000"), 1.into());
        assert_eq!(dim("1001"), 24.into());
        assert!(rs.weyl_dim(&Weight::new(&[1, -1, 0, 0])).is_err());
        assert!(rs.weyl_dim(&Weight::new(&[1, 0, 0])).is_err());
    }

    #[test]
    fn adjoint_zero_weight_multiplicity() {
        let rs = a(4);
        let diag = rs.freudenthal_multiplicities(&"1001".parse().unwrap()).unwrap();
        assert_eq!(diag.get(&Weight::zero(4)), 4.into());
        assert_eq!(diag.total(), 24.into());
        let fund = rs.freudenthal_multiplicities(&"1000".parse().unwrap()).unwrap();
        assert_eq!(fund.len(), 5);
        assert!(fund.iter().all(|(_, m)| *m == 1.into()));
    }

    #[test]
    fn non_simply_laced_multiplicity_sums() {
        let g2 = RootSystem::new(CartanMatrix::new(vec![vec![2, -1], vec![-3, 2]]).unwrap()).unwrap();
        for w in [[1, 0], [0, 1], [1, 1], [2, 0]] {
            let w = Weight::new(&w);
            assert_eq!(g2.freudenthal_multiplicities(&w).unwrap().total(), g2.weyl_dim(&w).unwrap());
        }
        // G2 fundamental of dimension 7 has a zero weight of multiplicity 1.
        let seven = [Weight::new(&[1, 0]), Weight::new(&[0, 1])]
            .into_iter()
            .find(|w| g2.weyl_dim(w).unwrap() == 7.into())
            .unwrap();
        assert_eq!(g2.freudenthal_multiplicities(&seven).unwrap().get(&Weight::zero(2)), 1.into());
    }
}
