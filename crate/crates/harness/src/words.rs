use monodromy::{BraidWord, Generator};

/// `b_1^{±1}, …, b_{n-1}^{±1}, X_1^{±1}` in enumeration order.
pub fn alphabet(n: usize) -> Vec<(Generator, i8)> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push((Generator::B(i), 1));
        out.push((Generator::B(i), -1));
    }
    out.push((Generator::X(1), 1));
    out.push((Generator::X(1), -1));
    out
}

/// Freely reduced words over [`alphabet`] up to `max_len` letters, ordered by
/// length and then lexicographically; starts with the empty word.
pub fn reduced_words(n: usize, max_len: usize) -> Vec<BraidWord> {
    let letters = alphabet(n);
    let mut out = vec![Vec::new()];
    let mut level: Vec<Vec<(Generator, i8)>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &level {
            for &(g, e) in &letters {
                if w.last() == Some(&(g, -e)) {
                    continue;
                }
                let mut v = w.clone();
                v.push((g, e));
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out.into_iter().map(|w| BraidWord::new(w).expect("nonzero exponents")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        // 1 + k + k(k-1) + k(k-1)^2 + ... with k = 2n letters
        let words = reduced_words(3, 4);
        assert_eq!(words.len(), 1 + 6 + 30 + 150 + 750);
        assert!(words.iter().all(|w| w.is_reduced()));
        assert!(words.windows(2).all(|p| p[0].len() <= p[1].len()));
        assert_eq!(words[1].to_string(), "b1");
        assert_eq!(words[2].to_string(), "b1'");
        assert_eq!(reduced_words(1, 2).len(), 1 + 2 + 2);
        let set: std::collections::HashSet<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(set.len(), words.len());
    }
}
