#pragma once

#include "base.hpp"
#include "classical.hpp"
#include "document.hpp"
#include "errors.hpp"
#include "expression.hpp"
#include "extended_real.hpp"
#include "general.hpp"
#include "kosinski.hpp"
#include "ofn.hpp"
#include "path_algebra.hpp"
#include "piasecki.hpp"
#include "polynomial.hpp"
#include "propriety.hpp"
#include "render.hpp"
