#![allow(dead_code)]

use maxcomm_core::scalar::quat_int;
use maxcomm_core::{DElem, DMat, Domain};
use rand::Rng;

pub fn small_primes() -> [Domain; 4] {
    [Domain::Prime(2), Domain::Prime(3), Domain::Prime(5), Domain::Prime(7)]
}

/// Entry with integer coordinates in `[-2, 2]`; zero about half the time so
/// that singular matrices show up often.
pub fn random_entry<R: Rng>(d: &Domain, rng: &mut R) -> DElem {
    if rng.gen_bool(0.5) {
        return d.zero();
    }
    match d {
        Domain::Quaternion(_) => {
            let mut c = [0i64; 4];
            for x in &mut c {
                *x = rng.gen_range(-2..=2);
            }
            quat_int(d, c)
        }
        _ => d.from_i64(rng.gen_range(-2..=2)),
    }
}

pub fn random_matrix<R: Rng>(d: &Domain, n: usize, rng: &mut R) -> DMat {
    let rows: Vec<Vec<DElem>> = (0..n).map(|_| (0..n).map(|_| random_entry(d, rng)).collect()).collect();
    DMat::from_entries(d, &rows).expect("entries lie in the domain")
}

/// Matrix from a flat list of small integers, read row by row. Over a
/// quaternion domain each group of four integers is one entry.
pub fn matrix_from_ints(d: &Domain, n: usize, ints: &[i64]) -> DMat {
    let width = d.z_basis_size();
    let rows: Vec<Vec<DElem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let k = (i * n + j) * width;
                    match d {
                        Domain::Quaternion(_) => quat_int(d, [ints[k], ints[k + 1], ints[k + 2], ints[k + 3]]),
                        _ => d.from_i64(ints[k]),
                    }
                })
                .collect()
        })
        .collect();
    DMat::from_entries(d, &rows).expect("entries lie in the domain")
}
