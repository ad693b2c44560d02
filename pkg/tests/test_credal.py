"""
可信集单元测试 - 支配检查、最大流分配与一致分布采样
"""

import numpy as np
import pytest

from dsau.axioms.generators import random_mass, random_probability
from dsau.core.config import CONS_TOL, MASS_TOL
from dsau.core.errors import FrameMismatchError, InvalidMassError
from dsau.credal import (
    Allocation,
    allocation_marginals,
    build_allocation,
    is_consistent,
    sample_consistent,
)
from dsau.evidence import MassFunction, ProbabilityVector, belief_from_mass, vacuous
from dsau.frame import Frame


def _dominates_exhaustively(m, p) -> bool:
    """逐个子集比较 Bel(A) 与 P(A)"""
    n = m.frame.size
    for mask in range(1 << n):
        bel = sum(mass for a, mass in m.items() if a & ~mask == 0)
        prob = sum(p[i] for i in range(n) if (mask >> i) & 1)
        if bel > prob + 1e-9:
            return False
    return True


class TestConsistency:
    """支配检查测试类"""

    def test_vacuous_accepts_everything(self):
        """测试空信任函数被任何分布支配"""
        frame = Frame.of_size(3)
        bel = belief_from_mass(vacuous(frame))
        assert is_consistent(ProbabilityVector(frame, (1.0, 0.0, 0.0)), bel)

    def test_violation_witness(self, frame_ab):
        """测试违反支配时的见证"""
        bel = belief_from_mass(MassFunction(frame_ab, {0b01: 1.0}))
        verdict = is_consistent(ProbabilityVector(frame_ab, (0.5, 0.5)), bel)
        assert not verdict
        assert verdict.witness == 0b01
        assert verdict.slack == pytest.approx(-0.5)

    def test_r1_example(self, r1_mass, frame_ab):
        """测试 p = (0.5, 0.5) 支配 R1 例子"""
        assert is_consistent(ProbabilityVector(frame_ab, (0.5, 0.5)), belief_from_mass(r1_mass))

    def test_frame_mismatch(self, r1_mass):
        """测试框架不同"""
        with pytest.raises(FrameMismatchError):
            is_consistent(ProbabilityVector.uniform(Frame.of_size(3)), belief_from_mass(r1_mass))


class TestAllocation:
    """分配构造测试类"""

    def test_single_focal(self, frame_ab):
        """测试单焦元强制拆分"""
        m = vacuous(frame_ab)
        alloc = build_allocation(m, ProbabilityVector(frame_ab, (0.3, 0.7)))
        assert alloc is not None
        assert alloc.entries[(0b11, 0)] == pytest.approx(0.3, abs=MASS_TOL)
        assert alloc.entries[(0b11, 1)] == pytest.approx(0.7, abs=MASS_TOL)

    def test_infeasible(self, frame_ab):
        """测试不支配时无分配"""
        m = MassFunction(frame_ab, {0b01: 1.0})
        assert build_allocation(m, ProbabilityVector(frame_ab, (0.5, 0.5))) is None

    def test_r1_allocation_marginals(self, r1_mass, frame_ab):
        """测试分配的边缘恢复 p 与 m"""
        p = ProbabilityVector(frame_ab, (0.5, 0.5))
        alloc = build_allocation(r1_mass, p)
        assert alloc is not None
        p_back, m_back = allocation_marginals(alloc)
        np.testing.assert_allclose(p_back.p, p.p, atol=MASS_TOL)
        assert m_back.close_to(r1_mass, MASS_TOL)

    def test_random_marginals(self):
        """测试随机可行 (m, p) 上分配的边缘在 MASS_TOL 内恢复 p 与 m"""
        rng = np.random.default_rng(23)
        checked = 0
        for k in range(400):
            m = random_mass(Frame.of_size(int(rng.integers(1, 7))), rng)
            if k % 2:
                p = sample_consistent(m, seed=k, count=1)[0]
            else:
                p = random_probability(m.frame, rng)
            alloc = build_allocation(m, p)
            if alloc is None:
                continue
            checked += 1
            p_back, m_back = allocation_marginals(alloc)
            np.testing.assert_allclose(p_back.p, p.p, atol=MASS_TOL)
            assert m_back.close_to(m, MASS_TOL)
        assert checked >= 200

    def test_shortfall_within_tolerance(self, frame_ab):
        """测试缺口小于容差时仍给出分配，且边缘偏差不超过缺口"""
        m = MassFunction(frame_ab, {0b01: 1.0})
        p = ProbabilityVector(frame_ab, (1.0 - CONS_TOL / 2, CONS_TOL / 2))
        alloc = build_allocation(m, p)
        assert alloc is not None
        p_back, m_back = allocation_marginals(alloc)
        np.testing.assert_allclose(p_back.p, p.p, atol=CONS_TOL / 2 + 1e-12)
        assert m_back.close_to(m, 1e-12)

    def test_shortfall_beyond_tolerance(self, frame_ab):
        """测试缺口超过容差时无分配"""
        m = MassFunction(frame_ab, {0b01: 1.0})
        p = ProbabilityVector(frame_ab, (1.0 - 4 * CONS_TOL, 4 * CONS_TOL))
        assert build_allocation(m, p) is None

    def test_hand_allocation(self, frame_ab, r1_mass):
        """测试手工分配的边缘"""
        alloc = Allocation(frame_ab, {(0b01, 0): 0.2, (0b10, 1): 0.5, (0b11, 0): 0.3})
        p, m = allocation_marginals(alloc)
        assert p.p == pytest.approx((0.5, 0.5))
        assert m.close_to(r1_mass, 1e-12)
        assert alloc.for_set(0b11) == {0: 0.3}

    def test_single_element(self):
        """测试单元素框架"""
        frame = Frame(("x",))
        p, m = allocation_marginals(Allocation(frame, {(0b1, 0): 1.0}))
        assert p.p == (1.0,)
        assert dict(m.focal) == {0b1: 1.0}

    def test_invalid_entry(self, frame_ab):
        """测试 x ∉ A 的分配键"""
        with pytest.raises(InvalidMassError):
            Allocation(frame_ab, {(0b01, 1): 0.5})

    def test_matches_exhaustive_check(self):
        """测试最大流可行性与逐子集检查一致"""
        rng = np.random.default_rng(11)
        for _ in range(150):
            n = int(rng.integers(1, 5))
            frame = Frame.of_size(n)
            m = random_mass(frame, rng)
            p = random_probability(frame, rng)
            expected = _dominates_exhaustively(m, p)
            assert (build_allocation(m, p) is not None) == expected
            assert bool(is_consistent(p, belief_from_mass(m))) == expected


class TestSampling:
    """一致分布采样测试类"""

    def test_no_freedom(self, frame_ab):
        """测试 m({a})=1 时只有一个一致分布"""
        samples = sample_consistent(MassFunction(frame_ab, {0b01: 1.0}), seed=3, count=5)
        assert all(p.p == (1.0, 0.0) for p in samples)

    def test_samples_are_consistent(self):
        """测试所有样本都支配 Bel"""
        rng = np.random.default_rng(5)
        for _ in range(30):
            m = random_mass(Frame.of_size(int(rng.integers(1, 7))), rng)
            bel = belief_from_mass(m)
            for p in sample_consistent(m, seed=int(rng.integers(1000)), count=10):
                assert is_consistent(p, bel)

    def test_deterministic(self, r1_mass):
        """测试相同种子得到相同样本"""
        first = sample_consistent(r1_mass, seed=9, count=4)
        second = sample_consistent(r1_mass, seed=9, count=4)
        assert [p.p for p in first] == [p.p for p in second]

    def test_vacuous_covers_simplex(self, frame_ab):
        """测试空信任函数的样本散布在整个单纯形"""
        samples = sample_consistent(vacuous(frame_ab), seed=1, count=200)
        firsts = [p[0] for p in samples]
        assert min(firsts) < 0.1
        assert max(firsts) > 0.9
