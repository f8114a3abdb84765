#pragma once

#include "orderk/bigint.hpp"
#include "orderk/compositions.hpp"
#include "orderk/delta.hpp"
#include "orderk/family.hpp"
#include "orderk/mode.hpp"
#include "orderk/params.hpp"
#include "orderk/pmf.hpp"
#include "orderk/rational.hpp"
#include "orderk/scaled_float.hpp"
