//! Classical Kazhdan-Lusztig polynomials of a finite Weyl group, computed
//! from a Cartan matrix with the R-polynomial recursion. Used as a test
//! oracle; shares no code with the block machinery.

use std::collections::{HashMap, VecDeque};

/// Polynomial in q, coefficient `k` of `q^k` at index `k`.
pub type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

fn mul(a: &[i64], b: &[i64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

type Mat = Vec<i64>;

pub struct Coxeter {
    rank: usize,
    /// Elements in breadth-first order from the identity.
    elems: Vec<Mat>,
    index: HashMap<Mat, usize>,
    words: Vec<Vec<usize>>,
    /// `right[w][i]` is the index of `w s_i`.
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
}

impl Coxeter {
    /// `cartan[i][j]` pairs the i-th coroot with the j-th root.
    pub fn from_cartan(cartan: &[Vec<i64>]) -> Self {
        let n = cartan.len();
        let gens: Vec<Mat> = (0..n)
            .map(|i| {
                let mut m = vec![0; n * n];
                for r in 0..n {
                    m[r * n + r] = 1;
                }
                for j in 0..n {
                    m[i * n + j] -= cartan[i][j];
                }
                m
            })
            .collect();
        let matmul = |a: &Mat, b: &Mat| {
            let mut c = vec![0; n * n];
            for r in 0..n {
                for k in 0..n {
                    if a[r * n + k] != 0 {
                        for col in 0..n {
                            c[r * n + col] += a[r * n + k] * b[k * n + col];
                        }
                    }
                }
            }
            c
        };
        let mut id = vec![0; n * n];
        for r in 0..n {
            id[r * n + r] = 1;
        }
        let mut elems = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut words = vec![vec![]];
        let mut queue = VecDeque::from([0]);
        while let Some(w) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let x = matmul(&elems[w], g);
                if !index.contains_key(&x) {
                    index.insert(x.clone(), elems.len());
                    let mut word = words[w].clone();
                    word.push(i);
                    words.push(word);
                    queue.push_back(elems.len());
                    elems.push(x);
                }
            }
        }
        let right = elems
            .iter()
            .map(|w| gens.iter().map(|g| index[&matmul(w, g)]).collect())
            .collect();
        let left = elems
            .iter()
            .map(|w| gens.iter().map(|g| index[&matmul(g, w)]).collect())
            .collect();
        Coxeter { rank: n, elems, index, words, right, left }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn length(&self, w: usize) -> usize {
        self.words[w].len()
    }

    /// Lexicographically least reduced word, as `s1s2...`, or `e`.
    pub fn label(&self, w: usize) -> String {
        if self.words[w].is_empty() {
            return "e".into();
        }
        self.words[w].iter().map(|i| format!("s{}", i + 1)).collect()
    }

    /// Index of `s_i w`.
    pub fn left_mul(&self, i: usize, w: usize) -> usize {
        self.left[w][i]
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        (0..self.order()).find(|&w| self.label(w) == label)
    }

    fn is_right_descent(&self, w: usize, s: usize) -> bool {
        self.length(self.right[w][s]) < self.length(w)
    }

    /// All `R_{x,w}`, indexed `[x][w]`.
    pub fn r_polynomials(&self) -> Vec<Vec<Poly>> {
        let n = self.order();
        let mut r = vec![vec![Poly::new(); n]; n];
        r[0][0] = vec![1];
        // Breadth-first order lists elements by nondecreasing length.
        for w in 1..n {
            let s = (0..self.rank).find(|&s| self.is_right_descent(w, s)).expect("w is not the identity");
            let ws = self.right[w][s];
            for x in 0..n {
                let xs = self.right[x][s];
                r[x][w] = if self.length(xs) < self.length(x) {
                    r[xs][ws].clone()
                } else {
                    add(&mul(&[-1, 1], &r[x][ws]), &mul(&[0, 1], &r[xs][ws]))
                };
            }
        }
        r
    }

    /// All `P_{x,w}`, indexed `[x][w]`.
    pub fn kl_polynomials(&self) -> Vec<Vec<Poly>> {
        let n = self.order();
        let r = self.r_polynomials();
        let mut p = vec![vec![Poly::new(); n]; n];
        for w in 0..n {
            p[w][w] = vec![1];
            let mut xs: Vec<usize> = (0..n).filter(|&x| self.length(x) < self.length(w)).collect();
            xs.sort_by_key(|&x| std::cmp::Reverse(self.length(x)));
            for x in xs {
                let d = self.length(w) - self.length(x);
                let mut s = Poly::new();
                for y in 0..n {
                    if y != x && !p[y][w].is_empty() && !r[x][y].is_empty() {
                        s = add(&s, &mul(&r[x][y], &p[y][w]));
                    }
                }
                // q^d bar(P) - P = s, with deg P <= (d-1)/2.
                let keep = (d - 1) / 2;
                p[x][w] = trim(s.iter().take(keep + 1).map(|c| -c).collect());
            }
        }
        p
    }

    /// `P` keyed by `(label x, label w)`, nonzero entries only.
    pub fn kl_table(&self) -> HashMap<(String, String), Poly> {
        let p = self.kl_polynomials();
        let mut out = HashMap::new();
        for (x, row) in p.iter().enumerate() {
            for (w, q) in row.iter().enumerate() {
                if !q.is_empty() {
                    out.insert((self.label(x), self.label(w)), q.clone());
                }
            }
        }
        out
    }

    pub fn index_of_matrix(&self, m: &[i64]) -> Option<usize> {
        self.index.get(m).copied()
    }
}
