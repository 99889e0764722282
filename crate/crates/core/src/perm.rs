//! Small permutation utilities shared by the scanners and the regular module.

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// Advances to the next permutation in lexicographic order; false when `v`
/// was the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Parity of the number of inversions: +1 or -1.
pub fn sign<T: Ord>(v: &[T]) -> i8 {
    let mut inv = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
