#!/usr/bin/env python3
#
# -*- coding: utf-8 -*-
#  This program is free software; you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation; either version 2 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program; if not, write to the Free Software
#  Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston,
#  MA 02110-1301, USA.

import unittest

from tests.construct.test_alignment import TestAlignmentMatrix, TestPathPlan  # noqa: F401
from tests.construct.test_solvers import TestPaths, TestSolve3User, TestSquare  # noqa: F401
from tests.controller.test_controller import TestController  # noqa: F401
from tests.core.test_logger import TestLogger  # noqa: F401
from tests.core.test_options import TestOptions  # noqa: F401
from tests.core.test_structures import TestChannelSet, TestProblemSpec, TestStrategy  # noqa: F401
from tests.feasibility.test_bounds import TestBounds, TestCounting  # noqa: F401
from tests.feasibility.test_decide import (  # noqa: F401
    TestDecide,
    TestDof,
    TestFullySymmetric,
    TestTables,
    TestThreeUserSymmetric,
)
from tests.numsolve.test_numsolve import (  # noqa: F401
    TestAffine,
    TestDistinctSolutions,
    TestNewton,
    TestNewtonBoundary,
)
from tests.parse.test_channels import TestChannelCodec, TestLoading, TestMatrixCodec  # noqa: F401
from tests.parse.test_config import TestConfigParser  # noqa: F401
from tests.report.test_reports import TestReportManager, TestSummary  # noqa: F401
from tests.schubert.test_schubert import (  # noqa: F401
    TestLittlewoodRichardson,
    TestPartition,
    TestSolutionCount,
    TestWitness,
)
from tests.utils.test_common import TestCommonUtils  # noqa: F401
from tests.utils.test_linalg import TestLinalg  # noqa: F401
from tests.utils.test_random import TestRandom  # noqa: F401
from tests.verify.test_verify import TestChecks, TestVerificationReport  # noqa: F401


if __name__ == "__main__":
    unittest.main()
