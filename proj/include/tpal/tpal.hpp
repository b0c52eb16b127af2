// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "tpal/common.hpp"
#include "tpal/polynomial.hpp"
#include "tpal/dickson.hpp"
#include "tpal/linearization.hpp"
#include "tpal/newton_trace.hpp"
#include "tpal/aberth.hpp"
#include "tpal/oracle.hpp"
#include "tpal/io.hpp"
