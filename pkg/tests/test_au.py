"""
AU 度量单元测试
"""

import math

import numpy as np
import pytest

from dsau.au import au, au_value
from dsau.axioms.generators import random_mass, random_permutation
from dsau.credal import is_consistent, sample_consistent
from dsau.evidence import (
    MassFunction,
    ProbabilityVector,
    bayesian,
    belief_from_mass,
    expand,
    permute,
    shannon_entropy,
    vacuous,
)
from dsau.frame import Frame


def _random_masses(seed: int, count: int, max_size: int = 5):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield random_mass(Frame.of_size(int(rng.integers(1, max_size + 1))), rng)


class TestExamples:
    """已知取值测试类"""

    def test_r1_example(self, r1_mass):
        """测试 R1 例子：AU = 1，argmax (0.5, 0.5)"""
        result = au(r1_mass)
        assert result.value == pytest.approx(1.0, abs=1e-12)
        assert result.argmax.p == pytest.approx((0.5, 0.5), abs=1e-12)

    def test_constraint_binds(self, frame_ab):
        """测试 m({a}) = 0.6 时约束 p_a >= 0.6 起作用"""
        m = MassFunction(frame_ab, {0b01: 0.6, 0b11: 0.4})
        result = au(m)
        assert result.value == pytest.approx(0.9709505944546686, abs=1e-12)
        assert result.argmax.p == pytest.approx((0.6, 0.4), abs=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 7])
    def test_vacuous(self, n):
        """测试空信任函数：log₂ N，argmax 均匀"""
        result = au(vacuous(Frame.of_size(n)))
        assert result.value == pytest.approx(math.log2(n), abs=1e-12)
        assert result.argmax.p == pytest.approx((1.0 / n,) * n, abs=1e-12)

    def test_vacuous_on_subset(self):
        """测试 m(A) = 1 时 AU = log₂ |A|"""
        m = vacuous(Frame.of_size(5), 0b10110)
        assert au_value(m) == pytest.approx(math.log2(3), abs=1e-12)

    def test_bayesian(self):
        """测试贝叶斯 BPA 的 AU 等于 Shannon 熵"""
        p = ProbabilityVector(Frame.of_size(3), (0.2, 0.5, 0.3))
        result = au(bayesian(p))
        assert result.value == pytest.approx(1.4854752972273343, abs=1e-12)
        assert result.argmax.p == pytest.approx(p.p, abs=1e-12)

    def test_certain(self):
        """测试 m({x}) = 1 时 AU = 0"""
        assert au_value(vacuous(Frame.of_size(3), 0b010)) == 0.0

    def test_single_element_frame(self):
        """测试单元素框架"""
        result = au(vacuous(Frame(("x",))))
        assert result.value == 0.0
        assert result.argmax.p == (1.0,)

    def test_tie_prefers_larger_set(self, r1_mass):
        """测试比值相同时选择更大的集合"""
        steps = au(r1_mass).steps
        assert len(steps) == 1
        assert steps[0].subset == 0b11


class TestProperties:
    """随机 BPA 上的性质测试类"""

    def test_argmax_is_consistent(self):
        """测试 argmax 支配 Bel 且熵等于 AU"""
        for m in _random_masses(1, 200):
            result = au(m)
            assert is_consistent(result.argmax, belief_from_mass(m))
            assert shannon_entropy(result.argmax) == pytest.approx(result.value, abs=1e-9)

    def test_ratios_non_increasing(self):
        """测试贪心比值逐步不增，且选中的子集两两不交并覆盖框架"""
        for m in _random_masses(2, 200):
            steps = au(m).steps
            for first, second in zip(steps, steps[1:]):
                assert second.ratio <= first.ratio + 1e-9
            covered = 0
            for step in steps:
                assert covered & step.subset == 0
                covered |= step.subset
            assert covered == m.frame.full_mask

    def test_range(self):
        """测试 0 <= AU <= log₂ N"""
        for m in _random_masses(3, 200):
            value = au_value(m)
            assert -1e-12 <= value <= math.log2(m.frame.size) + 1e-12

    def test_dominates_sampled_entropies(self):
        """测试 AU 不小于任何一致分布的熵"""
        for k, m in enumerate(_random_masses(4, 50)):
            value = au_value(m)
            for p in sample_consistent(m, seed=k, count=50):
                assert shannon_entropy(p) <= value + 1e-9

    def test_invariant_under_permutation(self):
        """测试元素置换不改变 AU"""
        rng = np.random.default_rng(5)
        for m in _random_masses(6, 100):
            perm = random_permutation(m.frame.size, rng)
            assert au_value(permute(m, perm)) == pytest.approx(au_value(m), abs=1e-9)

    def test_invariant_under_expansion(self):
        """测试添加空元素不改变 AU"""
        for m in _random_masses(7, 100):
            assert au_value(expand(m, "extra")) == pytest.approx(au_value(m), abs=1e-9)
