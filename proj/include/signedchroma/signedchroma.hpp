#pragma once

#include "signedchroma/errors.hpp"
#include "signedchroma/linalg.hpp"
#include "signedchroma/graph.hpp"
#include "signedchroma/polynomial.hpp"
#include "signedchroma/chromatic.hpp"
#include "signedchroma/orientations.hpp"
#include "signedchroma/toric.hpp"
#include "signedchroma/io.hpp"
#include "signedchroma/verify.hpp"
