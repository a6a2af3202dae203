use cactus_core::cactus::{
    act_on_decgd, act_on_decgd_word, act_on_syt, act_on_tensor, act_on_word_boxes, bar_s1q, cactus_relations,
    check_equivariance, enumerate_decgds_over, iota_embed, jmath_embed, orbits, reduce_to_s1q, singular_elements,
    CactusWord, StandardTuple,
};
use cactus_core::growth::{decgd_to_syt, enumerate_cgds, syt_to_decgd, Decgd, IntervalFunction};
use cactus_core::jdt::{evacuation, partial_evacuation};
use cactus_core::tableaux::{standard_tableaux, Partition, RectangleFrame, SkewShape, SkewTableau};
use cactus_core::words::{enumerate_singular, is_highest_weight, lr_coefficient, q_symbol, Word};

fn p(rows: &[usize]) -> Partition {
    Partition::new(rows.to_vec()).unwrap()
}

fn syt(rows: &[&[u32]]) -> SkewTableau {
    SkewTableau::straight(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn full_word(n: usize, w: &CactusWord) -> CactusWord {
    CactusWord::new(n, w.generators().to_vec()).unwrap()
}

#[test]
fn syt_examples() {
    let t = syt(&[&[1, 2], &[3]]);
    assert_eq!(act_on_syt(&CactusWord::generator(3, 1, 2).unwrap(), &t).unwrap(), t);
    assert_eq!(act_on_syt(&CactusWord::generator(3, 1, 3).unwrap(), &t).unwrap(), syt(&[&[1, 3], &[2]]));
    for mu in Partition::all_of_size(5) {
        for t in standard_tableaux(&SkewShape::straight(mu)) {
            let full = act_on_syt(&CactusWord::generator(5, 1, 5).unwrap(), &t).unwrap();
            assert_eq!(full, evacuation(&t).unwrap());
        }
    }
}

#[test]
fn tensor_examples() {
    let box1 = p(&[1]);
    let b = vec![Word::parse("1", 2).unwrap(), Word::parse("2", 2).unwrap()];
    let s = CactusWord::generator(2, 1, 2).unwrap();
    let (once, _) = act_on_tensor(&s, &b, &[box1.clone(), box1.clone()]).unwrap();
    let (twice, _) = act_on_tensor(&s, &once, &[box1.clone(), box1.clone()]).unwrap();
    assert_eq!(twice, b);
    // reversing a word of boxes: ξ of the starred prefix
    let w = Word::parse("1213", 3).unwrap();
    let out = act_on_word_boxes(&CactusWord::generator(4, 1, 3).unwrap(), &w).unwrap();
    let prefix = cactus_core::jdt::xi_word(&cactus_core::words::star(&w.slice(0, 3)));
    assert_eq!(out, prefix.concat(&w.slice(3, 4)));
    // malformed factor
    let bad = vec![Word::parse("21", 2).unwrap()];
    assert!(act_on_tensor(&CactusWord::identity(1), &bad, &[p(&[2])]).is_err());
}

#[test]
fn tensor_relations_weights_and_singularity() {
    for n in 2..=5 {
        let relations = cactus_relations(n);
        for w in Word::all(n, 3) {
            for (a, b) in &relations {
                assert_eq!(act_on_word_boxes(a, &w).unwrap(), act_on_word_boxes(b, &w).unwrap(), "{a} vs {b} on {w}");
            }
            for pp in 1..n {
                for q in pp + 1..=n {
                    let g = CactusWord::generator(n, pp, q).unwrap();
                    let out = act_on_word_boxes(&g, &w).unwrap();
                    assert_eq!(out.weight(), w.weight());
                    assert_eq!(is_highest_weight(&out), is_highest_weight(&w));
                    let via = act_on_word_boxes(&full_word(n, &reduce_to_s1q(pp, q)), &w).unwrap();
                    assert_eq!(out, via);
                }
            }
        }
    }
}

#[test]
fn tensor_relations_on_general_factors() {
    let shape = [p(&[2, 1]), p(&[1]), p(&[2])];
    let t = StandardTuple::row_reading(&shape).unwrap();
    let words = Word::all(6, 2);
    let tuple_words: Vec<Vec<Word>> = words
        .iter()
        .filter_map(|w| {
            let blocks = vec![w.slice(0, 3), w.slice(3, 4), w.slice(4, 6)];
            let ok = blocks.iter().zip(t.tableaux()).all(|(b, tab)| &q_symbol(b.letters()) == tab);
            ok.then_some(blocks)
        })
        .collect();
    assert!(!tuple_words.is_empty());
    for b in &tuple_words {
        for (x, y) in cactus_relations(3) {
            assert_eq!(act_on_tensor(&x, b, &shape).unwrap(), act_on_tensor(&y, b, &shape).unwrap());
        }
        // blocks keep their recording tableaux, permuted with the factors
        let (out, new_shape) = act_on_tensor(&CactusWord::generator(3, 1, 3).unwrap(), b, &shape).unwrap();
        assert_eq!(new_shape, vec![p(&[2]), p(&[1]), p(&[2, 1])]);
        let moved = t.after_s1q(3);
        for (blk, tab) in out.iter().zip(moved.tableaux()) {
            assert_eq!(&q_symbol(blk.letters()), tab);
        }
    }
}

#[test]
fn syt_relations() {
    for size in 2..=6 {
        let relations = cactus_relations(size.min(5));
        for mu in Partition::all_of_size(size) {
            for t in standard_tableaux(&SkewShape::straight(mu)) {
                for (a, b) in &relations {
                    assert_eq!(act_on_syt(a, &t).unwrap(), act_on_syt(b, &t).unwrap());
                }
            }
        }
    }
}

fn all_box_decgds(frame: &RectangleFrame) -> Vec<Decgd> {
    enumerate_cgds(frame, 8).unwrap().iter().map(|c| Decgd::from_cgd(c).unwrap()).collect()
}

#[test]
fn decgd_involution_and_fixed_region() {
    for (r, d) in [(2, 4), (2, 5), (1, 4), (3, 5)] {
        let frame = RectangleFrame::new(r, d).unwrap();
        for g in all_box_decgds(&frame) {
            let k = g.period();
            for pp in 1..k {
                for q in pp + 1..=k {
                    let h = act_on_decgd(pp, q, &g).unwrap();
                    assert_eq!(act_on_decgd(pp, q, &h).unwrap(), g);
                    // nodes in intervals disjoint from or containing the wall interval are fixed
                    let (lo, hi) = (pp as i64, q as i64 + 1);
                    for i in 1..=k as i64 {
                        for j in i..=i + k as i64 {
                            let disjoint = j <= lo || i >= hi;
                            let contains = i <= lo && hi <= j;
                            if (disjoint || contains) && j - i <= k as i64 && i >= 1 && j <= k as i64 + 1 {
                                assert_eq!(h.gamma(i, j).unwrap(), g.gamma(i, j).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn decgd_shape_reversal() {
    let frame = RectangleFrame::new(2, 5).unwrap();
    let shape = [p(&[2, 1]), p(&[1]), p(&[2])];
    let ds = cactus_core::growth::enumerate_decgds(&frame, &shape, 8).unwrap();
    assert_eq!(ds.len(), 1);
    let out = act_on_decgd(1, 2, &ds[0]).unwrap();
    assert_eq!(out.shape(), &[p(&[1]), p(&[2, 1]), p(&[2])]);
}

#[test]
fn decgd_relations() {
    for (r, d) in [(2, 4), (2, 5), (3, 5), (1, 5)] {
        let frame = RectangleFrame::new(r, d).unwrap();
        for g in all_box_decgds(&frame) {
            let k = g.period();
            for (a, b) in cactus_relations(k.min(5)) {
                assert_eq!(act_on_decgd_word(&a, &g).unwrap(), act_on_decgd_word(&b, &g).unwrap(), "{a} vs {b}");
            }
        }
    }
}

#[test]
fn decgd_reduction_to_first_generators() {
    let frame = RectangleFrame::new(2, 5).unwrap();
    for g in all_box_decgds(&frame) {
        let k = g.period();
        for pp in 2..k {
            for q in pp + 1..=k {
                let direct = act_on_decgd(pp, q, &g).unwrap();
                let via = act_on_decgd_word(&full_word(k, &reduce_to_s1q(pp, q)), &g).unwrap();
                assert_eq!(direct, via);
            }
        }
    }
}

#[test]
fn decgd_flips_are_partial_evacuations() {
    for n in 1..=5 {
        for mu in Partition::all_of_size(n) {
            let frame = cactus_core::cactus::default_frame_for(&mu).unwrap();
            for t in standard_tableaux(&SkewShape::straight(mu.clone())) {
                let g = syt_to_decgd(&t, &frame).unwrap();
                for q in 2..=n {
                    let lhs = decgd_to_syt(&act_on_decgd(1, q, &g).unwrap()).unwrap();
                    assert_eq!(lhs, partial_evacuation(&t, q).unwrap());
                }
            }
        }
    }
}

#[test]
fn q_symbols_follow_partial_evacuation() {
    for n in 1..=6 {
        for mu in Partition::all_of_size(n) {
            let r = mu.num_rows();
            for w in enumerate_singular(n, r, mu.rows()).unwrap() {
                for q in 2..=n {
                    let out = act_on_word_boxes(&CactusWord::generator(n, 1, q).unwrap(), &w).unwrap();
                    assert_eq!(q_symbol(out.letters()), partial_evacuation(&q_symbol(w.letters()), q).unwrap());
                }
            }
        }
    }
}

#[test]
fn embedding_examples() {
    // boxes: ι is the identity
    let boxes = vec![p(&[1]); 3];
    let tuple = StandardTuple::row_reading(&boxes).unwrap();
    for b in singular_elements(&tuple, &p(&[2, 1]), 2).unwrap() {
        let w = iota_embed(&tuple, &b).unwrap();
        assert_eq!(w, b[0].concat(&b[1]).concat(&b[2]));
    }
    // a single factor recovers inverse RSK
    let single = StandardTuple::new(vec![syt(&[&[1, 3], &[2]])]).unwrap();
    let b = vec![Word::parse("211", 2).unwrap()];
    let w = iota_embed(&single, &b).unwrap();
    assert_eq!(q_symbol(w.letters()), syt(&[&[1, 3], &[2]]));
    assert!(iota_embed(&single, &[Word::parse("212", 2).unwrap()]).is_err());
    // ȷ refines then coarsens back
    let shape = [p(&[2]), p(&[1]), p(&[1])];
    let mu = p(&[3, 1]);
    let frame = RectangleFrame::new(2, 6).unwrap();
    let tuple = StandardTuple::row_reading(&shape).unwrap();
    let ds = enumerate_decgds_over(&frame, &shape, &mu).unwrap();
    assert_eq!(ds.len() as u64, lr_coefficient(&mu, &shape).unwrap());
    let m = IntervalFunction::new(vec![2, 1, 1, 1]).unwrap();
    for d in &ds {
        assert_eq!(&jmath_embed(&tuple, d).unwrap().coarsen(&m).unwrap(), d);
    }
}

#[test]
fn figure_diagram_lifts_to_a_figure_cgd() {
    let frame = RectangleFrame::new(2, 5).unwrap();
    let shape = [p(&[2, 1]), p(&[1]), p(&[2])];
    let ds = cactus_core::growth::enumerate_decgds(&frame, &shape, 8).unwrap();
    let tuple = StandardTuple::new(vec![syt(&[&[1, 3], &[2]]), syt(&[&[1]]), syt(&[&[1, 2]])]).unwrap();
    let lifted = jmath_embed(&tuple, &ds[0]).unwrap();
    let cgds: Vec<Decgd> = all_box_decgds(&frame);
    assert!(cgds.contains(&lifted));
}

#[test]
fn equivariance_small_cases() {
    let report = check_equivariance(None, &[p(&[1]), p(&[1]), p(&[1])], &p(&[2, 1])).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    assert_eq!(report.singular_count, 2);
    let report = check_equivariance(None, &[p(&[2]), p(&[1]), p(&[1])], &p(&[2, 2])).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    let report = check_equivariance(None, &[p(&[2, 1]), p(&[1])], &p(&[3, 1])).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    // vanishing coefficient: nothing to check
    let report = check_equivariance(None, &[p(&[2]), p(&[2])], &p(&[1, 1, 1, 1])).unwrap();
    assert_eq!(report.lr_coefficient, 0);
    assert!(report.passed());
}

#[test]
fn equivariance_filling_the_frame() {
    let frame = RectangleFrame::new(2, 5).unwrap();
    let shape = [p(&[2, 1]), p(&[1]), p(&[2])];
    let report = check_equivariance(Some(&frame), &shape, &p(&[3, 3])).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    assert_eq!(report.decgd_count, 1);
}

#[test]
fn syt_orbits_for_two_one() {
    let seeds = standard_tableaux(&SkewShape::straight(p(&[2, 1])));
    let gens = [(1, 2), (1, 3)];
    let report = orbits(seeds, &gens, |(a, b), t| act_on_syt(&CactusWord::generator(3, a, b).unwrap(), t)).unwrap();
    assert_eq!(report.orbits.len(), 1);
    assert_eq!(report.orbits[0].len(), 2);
}

#[test]
fn block_reversal_on_boxes_is_the_generator() {
    let boxes = vec![p(&[1]); 4];
    for q in 2..=4 {
        let bar = bar_s1q(q, &boxes).unwrap();
        assert_eq!(bar.generators(), &[(1, q)]);
    }
}
