// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

namespace adiabat {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

}  // namespace adiabat
