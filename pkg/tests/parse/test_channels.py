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


import json
import os
import tempfile

from unittest import TestCase

import numpy as np

from lib.core.channels import generate_channels
from lib.core.exceptions import InvalidChannelFile, InvalidSpec, ShapeMismatch
from lib.core.structures import ProblemSpec, Strategy
from lib.parse.channels import (
    decode_channels,
    decode_matrix,
    decode_strategy,
    dumps,
    encode_channels,
    encode_matrix,
    encode_strategy,
    jsonable,
    load_channels,
    load_spec,
    load_strategy,
)


class TestMatrixCodec(TestCase):
    def test_row_major(self):
        matrix = np.array([[1 + 2j, 3], [4j, -5]])
        self.assertEqual(
            encode_matrix(matrix),
            {"rows": 2, "cols": 2, "re": [1.0, 3.0, 0.0, -5.0], "im": [2.0, 0.0, 4.0, 0.0]},
        )
        np.testing.assert_array_equal(decode_matrix(encode_matrix(matrix)), matrix)

    def test_malformed(self):
        with self.assertRaises(InvalidChannelFile):
            decode_matrix({"rows": 2, "cols": 2, "re": [1, 2, 3], "im": [0, 0, 0]})
        with self.assertRaises(InvalidChannelFile):
            decode_matrix({"rows": 1, "cols": 1, "re": [1]})
        with self.assertRaises(InvalidChannelFile):
            decode_matrix({"rows": "two", "cols": 1, "re": [1], "im": [0]})

    def test_jsonable(self):
        value = {(1, 2): np.int64(3), "x": (np.float64(0.5), [np.int32(1)]), "m": np.eye(1)}
        self.assertEqual(
            jsonable(value),
            {"(1, 2)": 3, "x": [0.5, [1]], "m": {"rows": 1, "cols": 1, "re": [1.0], "im": [0.0]}},
        )
        self.assertEqual(json.loads(dumps({"b": 1, "a": np.int8(2)})), {"a": 2, "b": 1})


class TestChannelCodec(TestCase):
    def setUp(self):
        self.spec = ProblemSpec.from_lists([2, 3, 2], [3, 2, 2], [1, 1, 1])
        self.ch = generate_channels(self.spec, 77)

    def test_channels(self):
        data = json.loads(dumps(encode_channels(self.ch)))
        self.assertEqual(sorted(data["cross"]), ["1,2", "1,3", "2,1", "2,3", "3,1", "3,2"])
        self.assertEqual(data["seed"], 77)

        ch = decode_channels(data)
        self.assertEqual(ch.spec, self.spec)
        for key, H in self.ch.cross.items():
            np.testing.assert_array_equal(ch.cross[key], H)
        np.testing.assert_array_equal(ch.direct[2], self.ch.direct[2])

    def test_without_direct(self):
        data = encode_channels(self.ch)
        data["direct"] = None
        self.assertIsNone(decode_channels(data).direct)

    def test_bad_channel_data(self):
        data = encode_channels(self.ch)
        data["cross"]["1-2"] = data["cross"].pop("1,2")
        with self.assertRaises(InvalidChannelFile):
            decode_channels(data)

        data = encode_channels(self.ch)
        del data["cross"]["3,1"]
        with self.assertRaises(ShapeMismatch):
            decode_channels(data)

        with self.assertRaises(InvalidChannelFile):
            decode_channels({"spec": {"users": []}, "cross": {}})

    def test_strategy(self):
        strategy = Strategy(
            tuple(np.ones((m, 1)) for m in self.spec.M),
            tuple(np.ones((n, 1)) * 1j for n in self.spec.N),
            {"method": "newton", "restart": np.int64(2)},
        )
        data = json.loads(dumps(encode_strategy(strategy, self.spec)))
        self.assertEqual(data["spec"], self.spec.to_dict())

        decoded = decode_strategy({"strategy": data, "verification": {}})
        self.assertEqual(decoded.meta, {"method": "newton", "restart": 2})
        np.testing.assert_array_equal(decoded.V[1], strategy.V[1])

        data["U"]["4"] = data["U"].pop("3")
        with self.assertRaises(InvalidChannelFile):
            decode_strategy(data)


class TestLoading(TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.ch = generate_channels(ProblemSpec.from_symmetric(3, 2, 2, 1), 5)

    def tearDown(self):
        self.directory.cleanup()

    def write(self, name, content):
        path = os.path.join(self.directory.name, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(content)
        return path

    def test_load(self):
        path = self.write("channels.json", dumps(encode_channels(self.ch)))
        self.assertEqual(load_channels(path).seed, 5)
        self.assertEqual(load_spec(path), self.ch.spec)

        spec_path = self.write("spec.json", dumps(self.ch.spec.to_dict()))
        self.assertEqual(load_spec(spec_path), self.ch.spec)

    def test_errors(self):
        with self.assertRaises(InvalidChannelFile):
            load_channels(os.path.join(self.directory.name, "missing.json"))
        with self.assertRaises(InvalidChannelFile):
            load_strategy(self.write("broken.json", "{not json"))
        with self.assertRaises(InvalidChannelFile):
            load_channels(self.write("shape.json", dumps({**encode_channels(self.ch), "cross": {}})))
        with self.assertRaises(InvalidSpec):
            load_spec(self.write("spec.json", dumps({"K": 4, "users": [{"M": 1, "N": 1, "d": 1}] * 3})))
