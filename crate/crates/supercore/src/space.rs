use crate::error::{Result, SuperError};

/// A Z2-graded vector space given by an ordered homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    labels: Vec<String>,
    parities: Vec<u8>,
}

impl SuperSpace {
    pub fn new(labels: Vec<String>, parities: Vec<u8>) -> Result<Self> {
        if parities.is_empty() {
            return Err(SuperError::EmptySpace);
        }
        if labels.len() != parities.len() {
            return Err(SuperError::Dimension(format!(
                "{} labels for {} parities",
                labels.len(),
                parities.len()
            )));
        }
        if let Some(&p) = parities.iter().find(|&&p| p > 1) {
            return Err(SuperError::BadParity(p));
        }
        Ok(SuperSpace { labels, parities })
    }

    /// Space with default labels `v0, v1, ...`.
    pub fn from_parities(parities: &[u8]) -> Result<Self> {
        let labels = (0..parities.len()).map(|i| format!("v{i}")).collect();
        SuperSpace::new(labels, parities.to_vec())
    }

    /// `C^{d0|d1}`: `d0` even vectors followed by `d1` odd ones.
    pub fn standard(d0: usize, d1: usize) -> Result<Self> {
        let parities: Vec<u8> = std::iter::repeat_n(0, d0).chain(std::iter::repeat_n(1, d1)).collect();
        SuperSpace::from_parities(&parities)
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    /// `(d0, d1)`.
    pub fn dims(&self) -> (usize, usize) {
        let d1 = self.parities.iter().filter(|&&p| p == 1).count();
        (self.dim() - d1, d1)
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parities[i]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Tensor product with lexicographic basis, leftmost factor most significant.
    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        let mut parities = Vec::with_capacity(self.dim() * other.dim());
        for (a, pa) in self.labels.iter().zip(&self.parities) {
            for (b, pb) in other.labels.iter().zip(&other.parities) {
                labels.push(format!("{a}⊗{b}"));
                parities.push((pa + pb) % 2);
            }
        }
        SuperSpace { labels, parities }
    }

    /// Tensor product of a nonempty list of spaces.
    pub fn tensor_all(spaces: &[SuperSpace]) -> Result<SuperSpace> {
        let (first, rest) = spaces.split_first().ok_or(SuperError::EmptySpace)?;
        Ok(rest.iter().fold(first.clone(), |acc, s| acc.tensor(s)))
    }

    /// Same dimension and parity pattern (labels ignored).
    pub fn compatible(&self, other: &SuperSpace) -> bool {
        self.parities == other.parities
    }
}
