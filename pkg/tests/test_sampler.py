#!/usr/bin/env python

import nose
from pyspgr.combinat import IndexSet, FlagWord, flag_enumerate
from pyspgr.constants import *
from pyspgr.errors import SpgrError
from pyspgr.equations import e_family
from pyspgr.pluecker import plucker, is_isotropic, evaluate
from pyspgr.sampler import *
from nose.tools import ok_, eq_, raises, assert_raises
from nose.plugins.attrib import attr


def test_config_defaults():
    cfg = SampleConfig()
    eq_((cfg.seed, cfg.coefficient_bound, cfg.max_resamples),
            (DEFAULT_SEED, DEFAULT_BOUND, DEFAULT_MAX_RESAMPLES))

def test_config_invalid():
    for kwargs in (dict(seed=-1), dict(coefficient_bound=0),
            dict(max_resamples=0)):
        with assert_raises(SpgrError) as cm:
            SampleConfig(**kwargs)
        eq_(cm.exception.errno, ERR_SHAPE_MISMATCH)

def test_draws_are_reproducible():
    cfg = SampleConfig(seed=7)
    eq_(sample_isotropic(2, 6, cfg, 3), sample_isotropic(2, 6, cfg, 3))
    ok_(sample_isotropic(2, 6, cfg, 3) != sample_isotropic(2, 6, cfg, 4))

def test_randint_in_bound():
    cfg = SampleConfig(coefficient_bound=2)
    rng = cfg.generator(0)
    values = [cfg.randint(rng) for _ in range(200)]
    ok_(all(-2 <= v <= 2 for v in values))
    ok_(all(isinstance(v, int) for v in values))

def test_spawn():
    children = SampleConfig(seed=1).spawn(3)
    eq_(len(children), 3)
    eq_(len(set(c.seed for c in children)), 3)
    eq_([c.seed for c in children], [c.seed for c in SampleConfig(1).spawn(3)])

def test_sample_isotropic():
    cfg = SampleConfig()
    for d, two_n in ((1, 4), (2, 4), (2, 6), (3, 6), (3, 8)):
        e = e_family(d, two_n)
        for draw in range(5):
            v = sample_isotropic(d, two_n, cfg, draw)
            eq_((v.two_n, v.d), (two_n, d))
            ok_(is_isotropic(v))
            ok_(all(evaluate(s, v) == 0 for s in e))

def test_sample_isotropic_too_large():
    with assert_raises(SpgrError) as cm:
        sample_isotropic(3, 4, SampleConfig())
    eq_(cm.exception.errno, ERR_SHAPE_MISMATCH)

def test_sample_schubert():
    cfg = SampleConfig()
    i = IndexSet((1, 3, 7), 8)
    for draw in range(5):
        v = sample_schubert(i, True, cfg, draw)
        eq_(plucker(v, i), 1)
        ok_(is_isotropic(v))
        # all rows below i_t vanish in column t
        for t, row in enumerate(i, 1):
            ok_(all(v.entry(r, t) == 0 for r in range(row + 1, 9)))

def test_sample_schubert_type_a():
    cfg = SampleConfig()
    v = sample_schubert(IndexSet((2, 7), 8), False, cfg)
    eq_(plucker(v, IndexSet((2, 7), 8)), 1)

def test_sample_schubert_needs_symplectic():
    with assert_raises(SpgrError) as cm:
        sample_schubert(IndexSet((2, 7), 8), True, SampleConfig())
    eq_(cm.exception.errno, ERR_NOT_SYMPLECTIC)

def test_sample_standard_point():
    i = IndexSet((2, 4, 5), 8)
    v = sample_standard_point(i, SampleConfig(), 2)
    for t, row in enumerate(i, 1):
        eq_([v.entry(row, s) for s in (1, 2, 3)],
                [int(s == t) for s in (1, 2, 3)])

def test_sample_flag():
    cfg = SampleConfig()
    for w in flag_enumerate(2, symplectic_only=True):
        f = sample_flag(w, True, cfg, 1)
        eq_(f.length, 2)
        for d in (1, 2):
            ok_(plucker(f.prefix(d), w.prefix(d)) != 0)
        ok_(is_isotropic(f.prefix(2)))

def test_sample_standard_flag():
    w = FlagWord((3, 1, 5), 6)
    f = sample_standard_flag(w, True, SampleConfig(), 0)
    ok_(is_isotropic(f.prefix(3)))
    for d in (1, 2, 3):
        eq_(abs(plucker(f.prefix(d), w.prefix(d))), 1)

@attr('slow')
def test_samplers_over_many_seeds():
    i = IndexSet((1, 3, 7), 8)
    w = FlagWord((3, 1, 5), 6)
    e = e_family(2, 6)
    for seed in range(1000):
        cfg = SampleConfig(seed=seed)
        v = sample_isotropic(2, 6, cfg)
        ok_(is_isotropic(v))
        ok_(all(evaluate(s, v) == 0 for s in e))
        v = sample_schubert(i, True, cfg)
        eq_(plucker(v, i), 1)
        ok_(is_isotropic(v))
        f = sample_flag(w, True, cfg)
        ok_(is_isotropic(f.prefix(3)))
        for d in (1, 2, 3):
            ok_(plucker(f.prefix(d), w.prefix(d)) != 0)

if __name__ == '__main__':
    nose.main()
