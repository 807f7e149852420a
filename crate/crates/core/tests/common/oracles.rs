//! Independent brute-force oracles.

use hpk::sset::TruncatedSimplicialSet;

/// Counts simplicial maps by trying every function level by level and
/// keeping those commuting with all faces and degeneracies seen so far.
pub fn brute_force_count(x: &TruncatedSimplicialSet, y: &TruncatedSimplicialSet) -> usize {
    fn rec(
        x: &TruncatedSimplicialSet,
        y: &TruncatedSimplicialSet,
        n: usize,
        s: usize,
        img: &mut Vec<Vec<usize>>,
    ) -> usize {
        if n > x.depth() {
            return 1;
        }
        if s == x.level_size(n) {
            return rec(x, y, n + 1, 0, img);
        }
        let mut total = 0;
        for t in 0..y.level_size(n) {
            let faces_ok =
                n == 0 || (0..=n).all(|i| y.face(n, i, t) == img[n - 1][x.face(n, i, s)]);
            let degs_ok = n == 0
                || (0..n).all(|i| {
                    (0..x.level_size(n - 1))
                        .filter(|&u| x.degeneracy(n - 1, i, u) == s)
                        .all(|u| y.degeneracy(n - 1, i, img[n - 1][u]) == t)
                });
            if faces_ok && degs_ok {
                img[n][s] = t;
                total += rec(x, y, n, s + 1, img);
            }
        }
        total
    }
    let mut img: Vec<Vec<usize>> = (0..=x.depth()).map(|n| vec![0; x.level_size(n)]).collect();
    rec(x, y, 0, 0, &mut img)
}
