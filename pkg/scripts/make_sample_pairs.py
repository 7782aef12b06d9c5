"""Writes the bundled sample RQE training pairs.

Each hand-written consumer question is paired with the collection question
it entails (label 1), with a same-focus question of another type (label 0)
and with a same-type question about another focus (label 0).
"""

import json
import sys

PREMISES = [
    (("Legionnaire", "Prognosis"), "What is the outlook for Legionnaire disease?"),
    (("Legionnaire", "Prognosis"), "My father has Legionnaire disease. What is the prognosis, will he recover?"),
    (("Legionnaire", "Causes"), "How do people catch Legionnaire disease? What causes it?"),
    (("Legionnaire", "Symptoms"), "What symptoms does Legionnaire disease cause? My husband has a cough and fever."),
    (("Legionnaire", "Treatment"), "Which antibiotics treat Legionnaire disease and is there a cure?"),
    (("Torticollis", "Treatment"), "Is there any treatment for my wry neck (torticollis)? How can I relieve the pain?"),
    (("Torticollis", "Causes"), "Why did I get torticollis? What causes it in adults?"),
    (("Acromegaly", "Information"), "I read about acromegaly, what is it exactly?"),
    (("Acromegaly", "Symptoms"), "What are the signs and symptoms of acromegaly? My hands and feet keep growing."),
    (("Acromegaly", "Prognosis"), "What is the long term outlook for someone with acromegaly after surgery?"),
    (("Acromegaly", "Diagnosis"), "How do doctors diagnose acromegaly, which tests are needed?"),
    (("Langerhans", "Treatment"), "My son was diagnosed with Langerhans cell histiocytosis. What treatments are available?"),
    (("Langerhans", "Prognosis"), "What is the prognosis for a child with Langerhans cell histiocytosis?"),
    (("diaphragmatic", "GeneticChanges"), "what are the causes of congenital diaphragmatic hernia? is it genetic?"),
    (("diaphragmatic", "Inheritance"), "Can congenital diaphragmatic hernia be inherited by my next baby?"),
    (("diaphragmatic", "Prognosis"), "What kind of lung problems might a baby with congenital diaphragmatic hernia experience life long? What is the outlook?"),
    (("Tinnitus", "Research"), "What is the latest news on tinnitus research? I have had ringing in the ear for years."),
    (("Tinnitus", "Treatment"), "Is there any treatment that can help me manage tinnitus?"),
    (("Tinnitus", "Causes"), "What causes ringing in the ears (tinnitus)?"),
    (("Alzheimer", "SupportGroups"), "My mother has Alzheimer's disease. Where can we find support and resources for caregivers?"),
    (("Alzheimer", "Symptoms"), "What are the early symptoms of Alzheimer's disease?"),
    (("Alzheimer", "Inheritance"), "Is Alzheimer's disease inherited? My grandmother had it."),
    (("Wolff", "Information"), "My son has to be tested for WPW. Could you send me information on Wolff-Parkinson-White syndrome?"),
    (("Wolff", "Treatment"), "Can Wolff-Parkinson-White syndrome be cured with ablation? What treatments exist?"),
    (("Shingles", "Prevention"), "I am looking for information on how to prevent a shingles outbreak."),
    (("Shingles", "Symptoms"), "What are the symptoms of shingles? I have a painful rash on one side."),
    (("Shingles", "Complications"), "What complications can shingles cause, like nerve pain?"),
    (("Hypoglycemia", "Causes"), "What are the reasons for hypoglycemia in newborns?"),
    (("Hypoglycemia", "Prevention"), "What steps should a pregnant woman take to prevent hypoglycemia in newborns?"),
    (("Dementia", "Inheritance"), "Is dementia genetically passed down or could anyone get it?"),
    (("Appendicitis", "Symptoms"), "Is there always fever with appendicitis? What are the symptoms?"),
    (("Appendicitis", "Treatment"), "Do you need surgery to treat appendicitis?"),
    (("Trisomy", "Diagnosis"), "How do you diagnose trisomy 13 (Patau syndrome)?"),
    (("Diverticulitis", "Diagnosis"), "Can diverticulitis be detected by a CT scan? How is it diagnosed?"),
    (("Uveitis", "Causes"), "What causes uveitis, is it an autoimmune disease?"),
    (("Metformin", "SideEffects"), "Does metformin cause side effects like diarrhea?"),
    (("Metformin", "Dose"), "What is the maximum daily dosage of metformin?"),
    (("Amlodipine", "SideEffects"), "I am taking amlodipine and my ankles are swollen. Is that a side effect?"),
    (("Simvastatin", "Usage"), "Why is it recommended that simvastatin be taken in the evening?"),
    (("Hydrogen peroxide", "StorageDisposal"), "How do I safely dispose of expired hydrogen peroxide?"),
    (("Shingles vaccine", "WhyGetVaccinated"), "At what age should you get the shingles vaccine and why?"),
    (("Loperamide", "Indication"), "Why is loperamide prescribed for chronic diarrhea?"),
    (("Vitamin D", "SideEffects"), "Can high doses of vitamin D cause side effects?"),
    (("Coronary", "Information"), "What exactly is coronary artery bypass surgery?"),
]


def main(collection_path, out):
    pairs = json.load(open(collection_path, encoding="utf-8"))["pairs"]
    rows = []
    for k, ((focus_key, type_name), premise) in enumerate(PREMISES):
        # exact focus match first so "Shingles" does not pick "Shingles vaccine"
        matches = [p for p in pairs if p["question_type"].endswith("/" + type_name)
                   and focus_key.lower() in p["focus"]["focus"].lower()]
        exact = [p for p in matches if p["focus"]["focus"].lower() == focus_key.lower()]
        target = (exact or matches)[0]
        focus, qtype = target["focus"]["focus"], target["question_type"]
        rows.append((premise, target["question"], 1))
        same_focus = [p for p in pairs if p["focus"]["focus"] == focus and p["question_type"] != qtype]
        same_type = [p for p in pairs if p["question_type"] == qtype and p["focus"]["focus"] != focus]
        # alternate which kind of negative comes first so both kinds are used
        for group in (same_focus, same_type) if k % 2 == 0 else (same_type, same_focus):
            if group:
                rows.append((premise, group[k % len(group)]["question"], 0))
                break
        else:
            other = pairs[(pairs.index(target) + 17) % len(pairs)]
            rows.append((premise, other["question"], 0))
    with open(out, "w", encoding="utf-8") as f:
        for premise, hypothesis, label in rows:
            f.write(f"{premise}\t{hypothesis}\t{label}\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
