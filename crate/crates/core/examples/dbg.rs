// Standalone re-run of the dual simplex with tracing, to find the divergence.
use num_traits::{One, Signed, Zero};
use tropcong::scalar::{rat_int, Rat};

fn rv(v: &[i64]) -> Vec<Rat> { v.iter().map(|&x| rat_int(x)).collect() }

fn pivot(tab: &mut [Vec<Rat>], basis: &mut [usize], row: usize, col: usize) {
    let inv = tab[row][col].recip();
    for v in tab[row].iter_mut() { if !v.is_zero() { *v = &*v * &inv; } }
    tab[row][col] = Rat::one();
    for i in 0..tab.len() {
        if i != row && !tab[i][col].is_zero() {
            let factor = std::mem::replace(&mut tab[i][col], Rat::zero());
            for j in 0..tab[i].len() {
                if !tab[row][j].is_zero() {
                    let sub = &factor * &tab[row][j];
                    tab[i][j] = &tab[i][j] - sub;
                }
            }
        }
    }
    basis[row] = col;
}

fn run(tab: &mut Vec<Vec<Rat>>, basis: &mut Vec<usize>, ncols: usize, rhs_col: usize, cost: &dyn Fn(usize) -> Rat, tag: &str) {
    loop {
        let mut entering = None;
        for j in 0..ncols {
            if basis.contains(&j) { continue; }
            let mut red = cost(j);
            for (i, &bj) in basis.iter().enumerate() {
                let cb = cost(bj);
                if !cb.is_zero() && !tab[i][j].is_zero() { red -= cb * &tab[i][j]; }
            }
            if red.is_negative() { entering = Some(j); break; }
        }
        let Some(j) = entering else { println!("{tag}: optimal, basis {basis:?}"); return; };
        let mut best: Option<(Rat, usize, usize)> = None;
        for i in 0..tab.len() {
            if tab[i][j].is_positive() {
                let ratio = &tab[i][rhs_col] / &tab[i][j];
                let key = (ratio, basis[i], i);
                best = match best {
                    None => Some(key),
                    Some(cur) => if (key.0.clone(), key.1) < (cur.0.clone(), cur.1) { Some(key) } else { Some(cur) },
                };
            }
        }
        let Some((_, _, row)) = best else { println!("{tag}: unbounded at col {j}"); return; };
        println!("{tag}: enter {j} leave row {row} (basis var {})", basis[row]);
        pivot(tab, basis, row, j);
    }
}

fn main() {
    let a = vec![rv(&[1,-2]), rv(&[2,-1]), rv(&[-1,0]), rv(&[1,0]), rv(&[-1,2])];
    let b = rv(&[0,0,0,0,-1]);
    let c = rv(&[1,-2]);
    let n = 2usize; let l = 5usize;
    let mut tab = Vec::new();
    let mut flip = Vec::new();
    for i in 0..n {
        let neg = c[i].is_negative();
        flip.push(neg);
        let mut row: Vec<Rat> = Vec::new();
        for j in 0..l { let v = -&a[j][i]; row.push(if neg { -v } else { v }); }
        for k in 0..n { row.push(if k == i { Rat::one() } else { Rat::zero() }); }
        row.push(if neg { -&c[i] } else { c[i].clone() });
        tab.push(row);
    }
    let rhs_col = l + n;
    let q: Vec<Rat> = b.iter().map(|v| -v).collect();
    let mut basis: Vec<usize> = (l..l+n).collect();
    println!("initial tab:");
    for r in &tab { println!("  {:?}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>()); }
    let p1 = |j: usize| if j >= l { Rat::one() } else { Rat::zero() };
    run(&mut tab, &mut basis, l + n, rhs_col, &p1, "phase1");
    for r in &tab { println!("  {:?}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>()); }
    let q2 = q.clone();
    let p2 = move |j: usize| if j < l { q2[j].clone() } else { Rat::one() };
    run(&mut tab, &mut basis, l, rhs_col, &p2, "phase2");
    for r in &tab { println!("  {:?}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>()); }
    println!("basis {:?} flip {:?}", basis, flip);
    let mut value = Rat::zero();
    for (i, &bj) in basis.iter().enumerate() { if bj < l { value += &q[bj] * &tab[i][rhs_col]; } }
    println!("value {}", value);
}
