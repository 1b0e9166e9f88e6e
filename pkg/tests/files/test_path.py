"""Test the helpers for the paths of the output files."""
import os
import tempfile
import unittest
from unittest.mock import patch

from cerbernetix.bernstein.files import create_file_path, get_file_mode
from cerbernetix.bernstein.testing import test_cases


class TestPathHelpers(unittest.TestCase):
    """Test suite for the path helpers."""

    @test_cases(
        [
            ["read", {}, "rt"],
            ["create", {"create": True}, "wt"],
            ["append", {"append": True}, "at"],
            ["append wins", {"create": True, "append": True}, "at"],
        ]
    )
    def test_get_file_mode(self, _, params, expected):
        """Test the mode of the text files."""
        self.assertEqual(get_file_mode(**params), expected)

    def test_create_file_path(self):
        """Test the missing folders are created, once."""
        with tempfile.TemporaryDirectory() as root:
            folder = os.path.join(root, "runs", "stable05")
            filename = os.path.join(folder, "solution.csv")

            self.assertEqual(create_file_path(filename), folder)
            self.assertTrue(os.path.isdir(folder))
            self.assertEqual(create_file_path(filename), folder)

    def test_create_file_path_current_folder(self):
        """Test a bare filename needs no folder."""
        with patch("pathlib.Path.mkdir") as mock_mkdir:
            self.assertEqual(create_file_path("solution.csv"), ".")
            mock_mkdir.assert_not_called()

    def test_create_file_path_blocked(self):
        """Test a file standing in the way of a folder is reported."""
        with tempfile.TemporaryDirectory() as root:
            blocker = os.path.join(root, "runs")
            with open(blocker, "w", encoding="utf-8") as file:
                file.write("not a folder")

            self.assertRaises(OSError, create_file_path, os.path.join(blocker, "solution.csv"))
