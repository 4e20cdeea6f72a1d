//! Generators for the hard game families and random test corpora.
//!
//! Id layout is fixed per family: the `v` block first, then the `u` block,
//! then the `w` block, each in ascending subscript order.
//!
//! | family | ids |
//! |---|---|
//! | weak `W_n` | `v_1..v_2n` = `0..2n`, `u_0` = `2n`, `u_1` = `2n+1` |
//! | solitaire `S_n` | `v_0..v_{2n-1}` = `0..2n`, `u_j` = `2n+j-1` |
//! | whitegame `H_n` | `v_i` = `i-1`, `u_i` = `n+i-1`, `w_i` = `2n+i-1` |

use alloc::vec;
use alloc::vec::Vec;

use crate::game::{ParityGame, Player, Priority, VertexRecord};

/// The weak family `W_n` (`n >= 1`): `2n + 2` vertices, `4n + 2` edges,
/// `n + 2` priorities. Even wins `{u_0, v_1..v_n}`, Odd the rest.
pub fn gen_weak(n: usize) -> ParityGame {
    assert!(n >= 1, "family weak needs n >= 1");
    let v = |i: usize| i - 1;
    let u0 = 2 * n;
    let u1 = 2 * n + 1;
    let mut records = Vec::with_capacity(2 * n + 2);
    for i in 1..=n {
        let down = if i > 1 { v(i - 1) } else { u0 };
        records.push(VertexRecord::new(Player::Even, (i + 2) as Priority, [down, v(n + i)]));
    }
    for i in 1..=n {
        let down = if i > 1 { v(n + i - 1) } else { u1 };
        records.push(VertexRecord::new(Player::Odd, (i + 2) as Priority, [v(i), down]));
    }
    records.push(VertexRecord::new(Player::Even, 0, [u0]));
    records.push(VertexRecord::new(Player::Odd, 1, [u1]));
    ParityGame::new(records).expect("weak family is total")
}

/// The solitaire family `S_n` (`n >= 1`), all vertices owned by Even:
/// `3n` vertices, `4n` edges, `2n + 1` priorities. With `strong`, edges
/// `v_0 -> u_j` are added for every `j`, which makes the game one SCC.
pub fn gen_solitaire(n: usize, strong: bool) -> ParityGame {
    assert!(n >= 1, "family solitaire needs n >= 1");
    let u = |j: usize| 2 * n + j - 1;
    let mut records = Vec::with_capacity(3 * n);
    let mut v0 = vec![0];
    if strong {
        v0.extend((1..=n).map(u));
    }
    records.push(VertexRecord::new(Player::Even, 2, v0));
    for i in 1..2 * n {
        records.push(VertexRecord::new(Player::Even, (i + 2) as Priority, [i - 1]));
    }
    for j in 1..=n {
        records.push(VertexRecord::new(Player::Even, 1, [u(j), 2 * j - 1]));
    }
    ParityGame::new(records).expect("solitaire family is total")
}

/// `S_n` without its top vertex `v_{2n-1}`: everything but `u_n` is won by
/// Even. Vertex ids are those of [`gen_solitaire`] minus the removed one,
/// i.e. `u_n` keeps id `3n - 1` as a vertex of the subgame view.
pub fn solitaire_minus_top(n: usize) -> (ParityGame, crate::set::VertexSet) {
    let g = gen_solitaire(n, false);
    let live = g.full().remove(&g.set_of([2 * n - 1])).into_live();
    (g, live)
}

/// The family `H_n` (`n >= 1`): `3n` vertices and `6n - 3` edges. Won
/// entirely by Even for even `n` and by Odd for odd `n`.
pub fn gen_whitegame(n: usize) -> ParityGame {
    assert!(n >= 1, "family whitegame needs n >= 1");
    let v = |i: usize| i - 1;
    let u = |i: usize| n + i - 1;
    let w = |i: usize| 2 * n + i - 1;
    let box_iff_even = |i: usize| if i.is_multiple_of(2) { Player::Odd } else { Player::Even };
    let diamond_iff_even = |i: usize| if i.is_multiple_of(2) { Player::Even } else { Player::Odd };
    let mut records = Vec::with_capacity(3 * n);
    for i in 1..=n {
        let mut succ = vec![u(i)];
        if i < n {
            succ.push(v(i + 1));
        }
        records.push(VertexRecord::new(box_iff_even(i), (i + 1) as Priority, succ));
    }
    for i in 1..=n {
        let mut succ = vec![w(i)];
        if i < n {
            succ.push(v(i + 1));
        }
        records.push(VertexRecord::new(box_iff_even(i), (i % 2) as Priority, succ));
    }
    for i in 1..=n {
        let mut succ = vec![u(i)];
        if i > 1 {
            succ.push(w(i - 1));
        }
        records.push(VertexRecord::new(diamond_iff_even(i), (i % 2) as Priority, succ));
    }
    ParityGame::new(records).expect("whitegame family is total")
}

/// Lower bound `a_n` on recursive calls for `W_n`: `a_0 = 1`,
/// `a_{n+1} = a_n + n + 1`, closed form `1 + n(n+1)/2`.
pub fn expected_calls_weak(n: u64) -> u64 {
    1 + n * (n + 1) / 2
}
