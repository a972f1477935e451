# Copyright 2026 The RDP Accounting Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Renyi differential privacy accounting."""

from ._core import (
    DiscreteDistribution,
    EpsDelta,
    Gaussian,
    Laplace,
    Order,
    OrdersGrid,
    ProbabilityInterval,
    PureDp,
    QuadratureSettings,
    RandomizedResponse,
    RdpCurve,
    advanced_composition_bound,
    advanced_eps_delta,
    bayes_moment_bound,
    compose,
    drv_eps_delta,
    drv_optimal_probability_bound,
    group_privacy,
    lower_probability_bound,
    naive_eps,
    optimal_eps_for_delta,
    optimal_upper_probability_bound,
    oracle,
    probability_interval,
    pure_dp_epsilon,
    rdp_epsilon,
    renyi_divergence,
    renyi_divergence_quadrature,
    to_eps_delta,
    upper_probability_bound,
)

__all__ = [
    "DiscreteDistribution",
    "EpsDelta",
    "Gaussian",
    "Laplace",
    "Order",
    "OrdersGrid",
    "ProbabilityInterval",
    "PureDp",
    "QuadratureSettings",
    "RandomizedResponse",
    "RdpCurve",
    "advanced_composition_bound",
    "advanced_eps_delta",
    "bayes_moment_bound",
    "compose",
    "drv_eps_delta",
    "drv_optimal_probability_bound",
    "group_privacy",
    "lower_probability_bound",
    "naive_eps",
    "optimal_eps_for_delta",
    "optimal_upper_probability_bound",
    "oracle",
    "probability_interval",
    "pure_dp_epsilon",
    "rdp_epsilon",
    "renyi_divergence",
    "renyi_divergence_quadrature",
    "to_eps_delta",
    "upper_probability_bound",
]
