#!/usr/bin/env python3
# Copyright 2026 The lexlint Authors
# SPDX-License-Identifier: Apache-2.0
"""Writes the rule fixture corpus.

Every case is a small class whose expected violations are listed by hand
next to it. The expected.csv beside each rule's fixtures holds every
violation the case must produce (case,rule_id,identifier,line); a case with
no rows must produce none.

    python3 tests/fixtures/generate.py        # rewrite the corpus
"""

import csv
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from srcml_emit import (XML_DECL, Assign, Call, Class, Comment, Field, If,  # noqa: E402
                        Local, Loop, Method, Param, Property, Return, Switch,
                        Ternary, Throw, render)

HERE = os.path.dirname(os.path.abspath(__file__))

JAVA = "Java"
CS = "C#"


def cls(*members, name="Subject", **kw):
    return [Class(name, list(members), **kw)]


# (case, language, classes, [(rule_id, identifier)], positions)
CASES = {
    "A.1": [
        ("positive", JAVA, cls(
            Field("name", "String"),
            Method("getName", "String", body=[If("cached", [Return("name")]), Return("name")])),
         [("A.1", "getName")], False),
        ("no_conditional", JAVA, cls(
            Field("name", "String"),
            Method("getName", "String", body=[Return("name")])),
         [], False),
        ("private_access", JAVA, cls(
            Field("name", "String"),
            Method("getName", "String", specifiers=["private"],
                   body=[If("cached", [Return("name")]), Return("name")])),
         [], False),
        ("type_mismatch", JAVA, cls(
            Field("name", "Label"),
            Method("getName", "String", body=[If("cached", [Return("text")]), Return("text")])),
         [], False),
        ("no_attribute", JAVA, cls(
            Method("getName", "String", body=[If("cached", [Return("text")]), Return("text")])),
         [], False),
        ("switch_csharp", CS, cls(
            Field("title", "string"),
            Method("GetTitle", "string", body=[Switch("mode"), Return("title")])),
         [("A.1", "GetTitle")], True),
    ],
    "A.2": [
        ("positive", JAVA, cls(Method("isValid", "int", body=[Return("code")])),
         [("A.2", "isValid")], False),
        ("boolean_return", JAVA, cls(Method("isValid", "boolean", body=[Return("ok")])),
         [], False),
        ("not_predicate", JAVA, cls(Method("validCode", "int", body=[Return("code")])),
         [], False),
        ("test_method", JAVA, cls(
            Method("isValid", "int", annotations=["Test"], body=[Return("code")])),
         [], False),
        ("has_csharp", CS, cls(Method("HasChildren", "string", body=[Return("label")])),
         [("A.2", "HasChildren")], False),
    ],
    "A.3": [
        ("positive", JAVA, cls(
            Method("setName", "Widget", params=[Param("name", "String")],
                   body=[Assign("this.name", "name"), Return("this")])),
         [("A.3", "setName")], False),
        ("void_return", JAVA, cls(
            Method("setName", "void", params=[Param("name", "String")],
                   body=[Assign("this.name", "name")])),
         [], False),
        ("with_prefix", JAVA, cls(
            Method("withName", "Widget", params=[Param("name", "String")],
                   body=[Assign("this.name", "name"), Return("this")])),
         [], False),
        ("test_method", JAVA, cls(
            Method("setUp", "Widget", annotations=["Test"], body=[Return("fixture")])),
         [("A.3", "setUp")], False),
    ],
    "A.4": [
        ("positive", JAVA, cls(Method("getItem", "List<Item>", body=[Return("items")])),
         [("A.4", "getItem")], False),
        ("plural_name", JAVA, cls(Method("getItems", "List<Item>", body=[Return("items")])),
         [], False),
        ("collection_word", JAVA, cls(Method("getItemList", "List<Item>", body=[Return("items")])),
         [], False),
        ("single_return", JAVA, cls(Method("getItem", "Item", body=[Return("item")])),
         [], False),
        ("array_csharp", CS, cls(Method("GetRow", "int[]", body=[Return("cells")])),
         [("A.4", "GetRow")], False),
    ],
    "B.1": [
        ("positive", JAVA, cls(Method("processIfReady", "void", body=[Call("start")])),
         [("B.1", "processIfReady")], False),
        ("with_if", JAVA, cls(
            Method("processIfReady", "void", body=[If("ready", [Call("start")])])),
         [], False),
        ("comment_term", JAVA, cls(
            Method("startEngine", "void", body=[Call("ignite")],
                   comment=Comment("Starts the engine when the key turns."))),
         [("B.1", "startEngine")], False),
        ("no_term", JAVA, cls(Method("processReady", "void", body=[Call("start")])),
         [], False),
        ("loop_only", JAVA, cls(
            Method("runWhenReady", "void", body=[Loop("while", [Call("tick")])])),
         [("B.1", "runWhenReady")], False),
        ("ternary", JAVA, cls(
            Method("pickWhenReady", "void", body=[Ternary("choice")])),
         [], False),
        ("test_method", JAVA, cls(
            Method("runsWhenIdle", "void", annotations=["Test"], body=[Call("check")])),
         [("B.1", "runsWhenIdle")], False),
        ("abstract_method", JAVA, cls(
            Method("closeIfIdle", "void", specifiers=["public", "abstract"], body=None),
            specifiers=["public", "abstract"]),
         [], False),
    ],
    "B.2": [
        ("positive", JAVA, cls(
            Method("validateInput", "void", params=[Param("value", "String")], body=[Call("store")])),
         [("B.2", "validateInput")], False),
        ("throws_in_body", JAVA, cls(
            Method("validateInput", "void", params=[Param("value", "String")],
                   body=[If("blank", [Throw("IllegalArgumentException")])])),
         [], False),
        ("declares_throws", JAVA, cls(
            Method("validateInput", "void", params=[Param("value", "String")],
                   throws=["ValidationException"], body=[Call("store")])),
         [], False),
        ("returns_boolean", JAVA, cls(
            Method("validateInput", "boolean", params=[Param("value", "String")],
                   body=[Return("ok")])),
         [], False),
    ],
    "B.3": [
        ("positive", JAVA, cls(Method("getName", "void", body=[Call("load")])),
         [("B.3", "getName")], False),
        ("returns_value", JAVA, cls(Method("getName", "String", body=[Return("text")])),
         [], False),
        ("load_prefix", JAVA, cls(Method("loadName", "void", body=[Call("load")])),
         [], False),
    ],
    "B.4": [
        ("positive", JAVA, cls(Method("isReady", "void", body=[Call("check")])),
         [("B.4", "isReady")], False),
        ("boolean_return", JAVA, cls(Method("isReady", "boolean", body=[Return("ready")])),
         [], False),
        ("not_question", JAVA, cls(Method("makeReady", "void", body=[Call("check")])),
         [], False),
    ],
    "B.5": [
        ("positive", JAVA, cls(Method("toJson", "void", body=[Call("write")])),
         [("B.5", "toJson")], False),
        ("inner_term", JAVA, cls(Method("saveToDisk", "void", body=[Call("write")])),
         [("B.5", "saveToDisk")], False),
        ("returns_value", JAVA, cls(Method("toJson", "String", body=[Return("text")])),
         [], False),
        ("trailing_to", JAVA, cls(
            Method("applyTo", "void", params=[Param("target", "Node")], body=[Call("write")])),
         [], False),
    ],
    "B.6": [
        ("env_vars", JAVA, cls(
            Method("getEnvironmentVariables2", "EnvVars", body=[Return("vars")]),
            name="Launcher"),
         [("B.6", "getEnvironmentVariables2")], True),
        ("collection_term", JAVA, cls(Method("getWidgetList", "Widget", body=[Return("widget")])),
         [("B.6", "getWidgetList")], False),
        ("collection_return", JAVA, cls(
            Method("getNames", "List<String>", body=[Return("names")])),
         [], False),
        ("singular_name", JAVA, cls(Method("getName", "String", body=[Return("text")])),
         [], False),
        ("unknown_return", CS, cls(Method("GetItems", "object", body=[Return("cache")])),
         [], False),
    ],
    "C.1": [
        ("get_completion_result", CS, cls(
            Method("GetCompletionResult", "CompletionResult", body=[Return("result")]),
            name="CompletionService"),
         [("C.1", "GetCompletionResult")], True),
        ("start_stopwatch", JAVA, cls(Method("startTimer", "StopWatch", body=[Return("watch")])),
         [("C.1", "startTimer")], False),
        ("no_antonym", JAVA, cls(Method("startTimer", "Timer", body=[Return("timer")])),
         [], False),
        ("test_method", CS, cls(
            Method("GetCompletionResult", "CompletionResult", annotations=["Fact"],
                   body=[Return("result")])),
         [], False),
    ],
    "C.2": [
        ("positive", JAVA, cls(
            Method("open", "void", body=[Call("connect")],
                   comment=Comment("Closes the connection."))),
         [("C.2", "open")], False),
        ("no_comment", JAVA, cls(Method("open", "void", body=[Call("connect")])),
         [], False),
        ("consistent_comment", JAVA, cls(
            Method("open", "void", body=[Call("connect")],
                   comment=Comment("Opens the connection."))),
         [], False),
        ("line_comment_csharp", CS, cls(
            Method("Enable", "void", body=[Call("Apply")],
                   comment=Comment("Disables the feature flag.", style="line"))),
         [("C.2", "Enable")], False),
    ],
    "D.1": [
        ("positive", JAVA, cls(Field("name", "List<String>")),
         [("D.1", "name")], False),
        ("plural_name", JAVA, cls(Field("names", "List<String>")),
         [], False),
        ("scalar_type", JAVA, cls(Field("name", "String")),
         [], False),
        ("local_variable", JAVA, cls(
            Method("render", "void", body=[Local("item", "List<Item>", "loaded"), Call("draw")])),
         [("D.1", "item")], False),
        ("array_parameter", CS, cls(
            Method("Print", "void", params=[Param("line", "string[]")], body=[Call("Flush")])),
         [("D.1", "line")], False),
    ],
    "D.2": [
        ("positive", JAVA, cls(Field("isEnabled", "int")),
         [("D.2", "isEnabled")], False),
        ("boolean_type", JAVA, cls(Field("isEnabled", "boolean")),
         [], False),
        ("not_predicate", JAVA, cls(Field("enabledCount", "int")),
         [], False),
        ("csharp_var", CS, cls(
            Method("Run", "void", body=[Local("isReady", "var", "Check"), Call("Go")])),
         [], False),
        ("csharp_property", CS, cls(Property("HasOwner", "string")),
         [("D.2", "HasOwner")], False),
    ],
    "E.1": [
        ("positive", JAVA, cls(Field("names", "String")),
         [("E.1", "names")], False),
        ("collection_type", JAVA, cls(Field("names", "List<String>")),
         [], False),
        ("singular_name", JAVA, cls(Field("name", "String")),
         [], False),
        ("csharp_var", CS, cls(
            Method("Run", "void", body=[Local("results", "var", "Load"), Call("Go")])),
         [], False),
        ("exception_word", JAVA, cls(Field("status", "String")),
         [], False),
        ("foreach_variable", JAVA, cls(
            Method("render", "void", body=[Loop("foreach", [Call("draw")], var="rows", var_type="Row")])),
         [("E.1", "rows")], False),
    ],
    "F.1": [
        ("positive", JAVA, cls(Field("end", "Begin")),
         [("F.1", "end")], False),
        ("no_antonym", JAVA, cls(Field("start", "Begin")),
         [], False),
        ("parameter", JAVA, cls(
            Method("route", "void", params=[Param("output", "Input")], body=[Call("send")])),
         [("F.1", "output")], False),
        ("ignored_case", CS, cls(Field("count", "Counter")),
         [], False),
    ],
    "F.2": [
        ("positive", JAVA, cls(
            Field("minValue", "int", comment=Comment("Maximum allowed."))),
         [("F.2", "minValue")], False),
        ("no_comment", JAVA, cls(Field("minValue", "int")),
         [], False),
        ("consistent_comment", JAVA, cls(
            Field("minValue", "int", comment=Comment("Minimum allowed."))),
         [], False),
        ("trailing_comment", JAVA, cls(
            Field("firstIndex", "int", trailing="index of the last row")),
         [("F.2", "firstIndex")], True),
    ],
    "G.1": [
        ("positive", JAVA, cls(Field("__", "int")),
         [("G.1", "__")], False),
        ("underscore_prefix", JAVA, cls(Field("_x", "int")),
         [], False),
        ("local_dollar", JAVA, cls(
            Method("run", "void", body=[Local("$$", "int", "zero"), Call("go")])),
         [("G.1", "$$")], False),
        ("letters", JAVA, cls(Field("x", "int")),
         [], False),
    ],
    "G.2": [
        ("positive", JAVA, cls(
            Method("testLogin", "void", annotations=["Test"], body=[Call("login")])),
         [("G.2", "testLogin")], False),
        ("not_annotated", JAVA, cls(Method("testLogin", "void", body=[Call("login")])),
         [], False),
        ("compliant_name", JAVA, cls(
            Method("loginSucceeds", "void", annotations=["Test"], body=[Call("login")])),
         [], False),
        ("csharp_fact", CS, cls(
            Method("TestLogin", "void", annotations=["Fact"], body=[Call("Login")])),
         [("G.2", "TestLogin")], True),
    ],
}


# Pairs of equivalent declarations: (case, java classes, csharp classes).
def parity_cases():
    def both(java_members, cs_members, name="Subject"):
        return cls(*java_members, name=name), cls(*cs_members, name=name)

    return [
        ("env_vars",) + both(
            [Method("getEnvironmentVariables2", "EnvVars", body=[Return("vars")])],
            [Method("GetEnvironmentVariables2", "EnvVars", body=[Return("vars")])]),
        ("completion_result",) + both(
            [Method("getCompletionResult", "CompletionResult", body=[Return("result")])],
            [Method("GetCompletionResult", "CompletionResult", body=[Return("result")])]),
        ("setter_returns",) + both(
            [Method("setName", "Widget", params=[Param("name", "String")], body=[Return("this")])],
            [Method("SetName", "Widget", params=[Param("name", "string")], body=[Return("this")])]),
        ("predicate_int",) + both(
            [Method("isValid", "int", body=[Return("code")])],
            [Method("IsValid", "int", body=[Return("code")])]),
        ("singular_collection",) + both(
            [Field("name", "List<String>", specifiers=["public"])],
            [Property("Name", "List<string>")]),
        ("boolean_fields",) + both(
            [Field("isEnabled", "int"), Field("isVisible", "boolean")],
            [Field("isEnabled", "int"), Field("isVisible", "bool")]),
        ("test_prefix",) + both(
            [Method("testLogin", "void", annotations=["Test"], body=[Call("login")])],
            [Method("TestLogin", "void", annotations=["Fact"], body=[Call("Login")])]),
        ("validation",) + both(
            [Method("validateInput", "void", params=[Param("value", "String")], body=[Call("store")])],
            [Method("ValidateInput", "void", params=[Param("value", "string")], body=[Call("Store")])]),
        ("map_return",) + both(
            [Method("getCount", "Map<String, Integer>", body=[Return("counts")])],
            [Method("GetCount", "Dictionary<string, int>", body=[Return("counts")])]),
        ("comment_antonym",) + both(
            [Method("open", "void", body=[Call("connect")], comment=Comment("Closes the connection."))],
            [Method("Open", "void", body=[Call("Connect")], comment=Comment("Closes the connection."))]),
    ]


def write(path, text):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def line_of(names, identifier, where):
    for name, line in names:
        if name == identifier:
            return line
    raise SystemExit(f"{where}: no declaration named {identifier!r}")


def main():
    for rule, cases in CASES.items():
        rows = []
        for case, lang, classes, expected, positions in cases:
            ext = "java" if lang == JAVA else "cs"
            unit, names = render(classes, lang, f"{rule}/{case}.{ext}", positions)
            write(os.path.join(HERE, rule, case + ".xml"), XML_DECL + unit + "\n")
            for rule_id, ident in expected:
                rows.append((case, rule_id, ident, line_of(names, ident, f"{rule}/{case}")))
        out = os.path.join(HERE, rule, "expected.csv")
        with open(out, "w", encoding="utf-8", newline="") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(["case", "rule_id", "identifier", "line"])
            w.writerows(rows)
    for case, java, csharp in parity_cases():
        for suffix, lang, classes in (("java", JAVA, java), ("csharp", CS, csharp)):
            ext = "java" if lang == JAVA else "cs"
            unit, _ = render(classes, lang, f"parity/{case}.{ext}")
            write(os.path.join(HERE, "parity", f"{case}_{suffix}.xml"), XML_DECL + unit + "\n")


if __name__ == "__main__":
    main()
