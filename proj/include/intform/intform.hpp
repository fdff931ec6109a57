// Umbrella header.
#pragma once

#include "intform/ainfty.hpp"
#include "intform/bernoulli.hpp"
#include "intform/element.hpp"
#include "intform/eulerian.hpp"
#include "intform/forms.hpp"
#include "intform/free_algebra.hpp"
#include "intform/lyndon.hpp"
#include "intform/magnus.hpp"
#include "intform/morphisms.hpp"
#include "intform/permutation.hpp"
#include "intform/piecewise.hpp"
#include "intform/poly.hpp"
#include "intform/rational.hpp"
#include "intform/tensor_word.hpp"
#include "intform/whitney.hpp"
