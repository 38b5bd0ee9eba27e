#pragma once

#include "cbkit/bese.hpp"
#include "cbkit/campaign.hpp"
#include "cbkit/conditions.hpp"
#include "cbkit/curves.hpp"
#include "cbkit/errors.hpp"
#include "cbkit/fields.hpp"
#include "cbkit/form.hpp"
#include "cbkit/hypersurface.hpp"
#include "cbkit/io.hpp"
#include "cbkit/matrix.hpp"
#include "cbkit/monomials.hpp"
#include "cbkit/point.hpp"
#include "cbkit/projection.hpp"
