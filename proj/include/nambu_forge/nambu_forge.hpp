#pragma once

#include "nambu_forge/rat.hpp"
#include "nambu_forge/multi_index.hpp"
#include "nambu_forge/poly.hpp"
#include "nambu_forge/derivation.hpp"
#include "nambu_forge/linalg.hpp"
#include "nambu_forge/verdict.hpp"
#include "nambu_forge/nlie.hpp"
#include "nambu_forge/rinehart.hpp"
#include "nambu_forge/psi_sum.hpp"
#include "nambu_forge/nambu.hpp"
#include "nambu_forge/algebroid.hpp"
#include "nambu_forge/builtins.hpp"
#include "nambu_forge/spec_document.hpp"
#include "nambu_forge/runner.hpp"
