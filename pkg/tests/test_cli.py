import io
import json
import subprocess
import sys

from kbruhat.cli import run
from kbruhat.constants import ConstantsReport
from kbruhat.korder import chain_from_json
from kbruhat.words import word_from_json


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return out.rstrip("\n")


class TestDocumentedExamples:
    def test_poly(self):
        assert ok("poly", "-n", "3") == "1 + 3t + 2t^2"
        assert json.loads(ok("poly", "-n", "4", "--json")) == [1, 6, 10, 6, 1]

    def test_const_c(self):
        assert ok("const", "c", "-z", "2,5,4,1,6,3", "-l", "2,2,1") == "2"
        assert ok("const", "c", "-z", "2,5,4,1,6,3", "-l", "2,2,1", "--route", "both") == "2"

    def test_universal_length_of_identity(self):
        assert ok("universal", "length", "1") == "0"


class TestSubcommands:
    def test_order(self):
        assert ok("order", "leq-k", "-u", "2,1,4,3,5", "-w", "4,5,1,2,3", "-k", "2") == "true"
        assert ok("order", "leq-k", "-u", "2,1,4,3,5", "-w", "4,5,1,2,3", "-k", "3") == "false"

    def test_chain_text(self):
        out = ok("chain", "cm", "-u", "2,1,4,3,5", "-w", "4,5,1,2,3", "-k", "2").splitlines()
        assert out[0] == "2,1,4,3,5"
        assert out[-1] == "word: u[3,4] u[2,3] u[4,5] u[1,4]"
        out = ok("chain", "dcm", "-u", "2,1,4,3,5", "-w", "4,5,1,2,3", "-k", "2")
        assert out.splitlines()[-1] == "word: u[3,4] u[4,5] u[2,3] u[1,4]"

    def test_chain_all(self):
        out = ok("chain", "all", "-u", "2,1,4,3,5", "-w", "4,5,1,2,3", "-k", "2").splitlines()
        assert len(out) == 5 and "u[3,5] u[2,3] u[1,2] u[2,4]" in out

    def test_chain_json_round_trips(self):
        data = json.loads(ok("chain", "all", "-u", "2,1,6,4,3,5", "-w", "4,5,6,1,2,3",
                             "-k", "3", "--json"))
        chains = [chain_from_json(d) for d in data]
        assert len(chains) == len({c.word for c in chains})
        single = json.loads(ok("chain", "cm", "-u", "2,1,6,4,3,5", "-w", "4,5,6,1,2,3",
                               "-k", "3", "--json"))
        assert chain_from_json(single).perms[1].window == (2, 4, 6, 1, 3, 5)

    def test_chain_dot(self):
        out = ok("chain", "all", "-u", "2,1,4,3,5", "-w", "4,5,1,2,3", "-k", "2", "--dot")
        assert out.startswith("digraph") and "label=" in out

    def test_universal(self):
        assert ok("universal", "length", "2,5,4,1,6,3") == "5"
        assert ok("universal", "interval", "2,5,4,1,6,3") == "u=1,3,2,5,4,6 w=2,4,5,6,1,3 k=4"
        assert ok("universal", "mobius", "2,1") == "-1"
        words = ok("universal", "words", "5,4,2,1,3").splitlines()
        assert len(words) == 5
        data = json.loads(ok("universal", "words", "5,4,2,1,3", "--json"))
        assert [word_from_json(d) for d in data][0][0] == (1, 4)
        assert ok("universal", "interval", "2,4,1,3", "--dot").count("->") == 5

    def test_const_table(self):
        out = ok("const", "table", "-z", "2,5,4,1,6,3").splitlines()
        assert "2,2,1\t2" in out and "2,1,1,1\t1" in out
        assert out[-1] == "chains=14 weighted=14 identity_ok=true"
        rep = ConstantsReport.from_json(ok("const", "table", "-z", "2,5,4,1,6,3", "--json"))
        assert rep.entries[(2, 2, 1)] == 2 and rep.identity_ok

    def test_const_schubert(self):
        assert ok("const", "schubert", "-u", "3,1,2,5,6,4", "-l", "2,2,1", "-k", "4",
                  "-w", "4,2,5,6,3,1") == "2"

    def test_insert_trace(self):
        out = ok("insert", "-x", "u[3,5] u[2,3] u[1,2] u[2,4]").splitlines()
        assert out[0].startswith("pos=0 rule=B before=u[3,5] u[2,3] u[1,2] u[2,4] after=")
        assert out[-1] == "result=u[3,4] u[4,5] u[2,3] u[1,4]"

    def test_checks(self):
        assert ok("check", "symmetries", "-n", "4").startswith("symmetries: ok")
        assert ok("check", "cyclic", "-n", "4").startswith("cyclic: ok")
        assert ok("check", "disjoint", "-e", "2,1", "-z", "1,2,4,3").endswith("disjoint: ok")
        assert ok("check", "disjoint", "-n", "4", "--max-length", "2").startswith("disjoint: ok")

    def test_verify_paper_subset(self):
        out = ok("verify-paper", "--only", "2,3,5").splitlines()
        assert out[-1] == "3/3 criteria passed"
        assert sum("PASS" in line for line in out) == 3


class TestExitCodes:
    def test_domain_error(self):
        code, _, err = call("chain", "cm", "-u", "4,5,1,2,3", "-w", "2,1,4,3,5", "-k", "2")
        assert code == 1 and "not <=_2" in err

    def test_resource_guards_are_domain_errors(self):
        assert call("poly", "-n", "10")[0] == 1
        assert call("poly", "-n", "6", "--max-n", "5")[0] == 1
        assert call("universal", "words", "2,5,4,1,6,3", "--max-chains", "3")[0] == 1

    def test_usage_errors(self):
        assert call()[0] == 2
        assert call("poly")[0] == 2
        assert call("poly", "-n", "3", "--frobnicate")[0] == 2
        assert call("universal", "length", "1,1")[0] == 2
        assert call("insert", "-x", "u[1,2")[0] == 2
        assert call("check", "disjoint", "-e", "2,1")[0] == 2

    def test_insert_precondition_is_domain_error(self):
        assert call("insert", "-x", "u[1,2] u[1,2]")[0] == 1

    def test_invariant_error(self, monkeypatch):
        from kbruhat import constants
        monkeypatch.setattr(constants, "disjoint_sides", lambda e, z: {(2,): (1, 2)})
        assert call("check", "disjoint", "-e", "2,1", "-z", "1,2,4,3")[0] == 3


class TestDeterminism:
    def test_thread_count_does_not_change_output(self, monkeypatch):
        a = ok("poly", "-n", "6", "--threads", "1")
        b = ok("poly", "-n", "6", "--threads", "3")
        monkeypatch.setenv("BRUHAT_THREADS", "2")
        c = ok("poly", "-n", "6")
        assert a == b == c

    def test_threads_flag_is_validated(self):
        assert call("poly", "-n", "3", "--threads", "0")[0] == 2

    def test_bad_env_is_a_usage_error(self, monkeypatch):
        monkeypatch.setenv("BRUHAT_THREADS", "many")
        assert call("poly", "-n", "3")[0] == 2

    def test_repeat_runs_are_byte_identical(self):
        argv = ("chain", "all", "-u", "2,1,6,4,3,5", "-w", "4,5,6,1,2,3", "-k", "3", "--json")
        assert ok(*argv) == ok(*argv)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kbruhat.cli", "poly", "-n", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1 + t"
