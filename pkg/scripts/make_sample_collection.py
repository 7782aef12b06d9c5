"""Writes the bundled 50-pair sample collection (hand-written answers)."""

import json
import sys

TOPICS = [
    # focus, synonyms, source, [(type, question, answer)]
    ("Legionnaire disease", ["Legionella pneumonia", "Pontiac fever", "Legionellosis"], "MedlinePlus", [
        ("DISEASE/Prognosis", "What is the outlook for Legionnaire disease?",
         "Most healthy people recover with antibiotic treatment, although recovery can take weeks. The illness is more serious in older adults and in people with weak immune systems."),
        ("DISEASE/Causes", "What causes Legionnaire disease?",
         "The disease is caused by Legionella bacteria that grow in warm water systems such as cooling towers, hot tubs and large plumbing systems. People get sick by breathing in mist that contains the bacteria."),
        ("DISEASE/Symptoms", "What are the symptoms of Legionnaire disease?",
         "Symptoms include cough, fever, chills, muscle aches, headache and shortness of breath. Some people also have diarrhea, nausea or confusion."),
        ("DISEASE/Treatment", "What are the treatments for Legionnaire disease?",
         "Legionnaire disease is treated with antibiotics. People who are very sick may need care in a hospital, including oxygen or breathing support."),
    ]),
    ("Torticollis", ["Spasmodic torticollis", "Wry neck", "Loxia", "Cervical dystonia"], "MedlinePlus", [
        ("DISEASE/Treatment", "What are the treatments for Torticollis?",
         "Treatment may include stretching exercises, heat, massage and neck braces. Botulinum toxin injections and medicines can relieve muscle spasms, and surgery is sometimes used."),
        ("DISEASE/Causes", "What causes Torticollis?",
         "Torticollis can be present at birth or develop later from injury to the neck muscles, nerve problems or reactions to some medicines. Often no cause is found."),
        ("DISEASE/Prognosis", "What is the outlook for Torticollis?",
         "The condition in infants often improves with stretching. In adults the outlook varies, and symptoms may persist or return."),
    ]),
    ("Acromegaly", ["Somatotroph adenoma", "Growth hormone excess"], "MedlinePlus", [
        ("DISEASE/Information", "What is Acromegaly?",
         "Acromegaly is a condition in which the pituitary gland makes too much growth hormone in adulthood, leading to enlarged hands, feet and facial bones."),
        ("DISEASE/Symptoms", "What are the symptoms of Acromegaly?",
         "Symptoms include enlarged hands and feet, changes in facial features, joint pain, thick skin, excessive sweating and headaches."),
        ("DISEASE/Prognosis", "What is the outlook for Acromegaly?",
         "Surgery to remove the pituitary tumor often corrects the hormone excess. Without treatment, the condition can shorten life because of heart and lung problems."),
        ("DISEASE/Diagnosis", "How to diagnose Acromegaly?",
         "Blood tests measure growth hormone and IGF-1 levels, often after a glucose tolerance test. An MRI scan of the pituitary gland looks for a tumor."),
    ]),
    ("Langerhans Cell Histiocytosis", ["Histiocytosis X", "LCH"], "NCI", [
        ("DISEASE/Treatment", "What are the treatments for Langerhans Cell Histiocytosis?",
         "Treatment depends on which organs are affected and may include surgery, chemotherapy, steroid therapy, radiation therapy or targeted therapy."),
        ("DISEASE/Symptoms", "What are the symptoms of Langerhans Cell Histiocytosis?",
         "Signs include bone pain or swelling, skin rash, frequent urination and thirst, and in some patients fever or weight loss."),
        ("DISEASE/Prognosis", "What is the outlook for Langerhans Cell Histiocytosis?",
         "The outlook depends on the organs involved and on how the disease responds to the first treatment. Disease limited to bone or skin has a very good prognosis."),
    ]),
    ("Congenital diaphragmatic hernia", ["Congenital diaphragmatic defect", "CDH"], "GHR", [
        ("DISEASE/GeneticChanges", "What are the genetic changes related to congenital diaphragmatic hernia?",
         "The condition has many causes. Some cases are part of syndromes caused by changes in single genes or by chromosomal abnormalities, but most isolated cases have no known genetic cause."),
        ("DISEASE/Inheritance", "Is congenital diaphragmatic hernia inherited?",
         "Isolated congenital diaphragmatic hernia is rarely inherited, and usually only one person in a family is affected."),
        ("DISEASE/Prognosis", "What is the outlook for congenital diaphragmatic hernia?",
         "The outcome depends on how well the lungs developed. Many infants survive, but some have long term problems with breathing, feeding and growth."),
    ]),
    ("Tinnitus", ["Ringing in the ears"], "NIHSeniorHealth", [
        ("DISEASE/Research", "What is the latest research on Tinnitus?",
         "Researchers are studying how the brain processes sound, testing sound therapy devices and investigating medicines that may reduce ringing in the ears."),
        ("DISEASE/Treatment", "What are the treatments for Tinnitus?",
         "Hearing aids, sound generators, counseling and cognitive behavioral therapy can help people manage tinnitus."),
        ("DISEASE/Causes", "What causes Tinnitus?",
         "Tinnitus is often caused by hearing loss from aging or loud noise. Ear wax, ear infections and some medicines can also cause ringing in the ears."),
    ]),
    ("Alzheimer's disease", ["Alzheimer disease", "Senile dementia"], "NIHSeniorHealth", [
        ("DISEASE/SupportGroups", "What resources are available for Alzheimer's caregivers?",
         "Caregivers can find support groups, respite care, adult day programs and financial counseling through local agencies and national organizations."),
        ("DISEASE/Symptoms", "What are the symptoms of Alzheimer's disease?",
         "Memory loss is usually the first sign, followed by problems with language, reasoning, judgment and everyday tasks."),
        ("DISEASE/Inheritance", "Is Alzheimer's disease inherited?",
         "Most cases are not directly inherited, although a family history raises risk. Rare early-onset forms are caused by single gene mutations passed down in families."),
    ]),
    ("Wolff-Parkinson-White syndrome", ["WPW syndrome", "Pre-excitation syndrome"], "GARD", [
        ("DISEASE/Information", "What is Wolff-Parkinson-White syndrome?",
         "Wolff-Parkinson-White syndrome is a heart condition in which an extra electrical pathway between the upper and lower chambers causes episodes of rapid heartbeat."),
        ("DISEASE/Treatment", "What are the treatments for Wolff-Parkinson-White syndrome?",
         "Medicines can control the heart rate, and catheter ablation can destroy the extra pathway and cure the condition in most people."),
    ]),
    ("Shingles", ["Herpes zoster", "Zoster"], "CDC", [
        ("DISEASE/Prevention", "How to prevent Shingles?",
         "The shingles vaccine is the best way to prevent the disease and its complications. Adults aged 50 and older are advised to get two doses."),
        ("DISEASE/Symptoms", "What are the symptoms of Shingles?",
         "Shingles causes a painful rash, usually a stripe of blisters on one side of the body, often with itching, fever or headache."),
        ("DISEASE/Complications", "What are the complications of Shingles?",
         "The most common complication is long lasting nerve pain called postherpetic neuralgia. Vision loss can occur if the eye is involved."),
    ]),
    ("Hypoglycemia in newborns", ["Neonatal hypoglycemia", "Low blood sugar in newborns"], "MedlinePlus", [
        ("DISEASE/Causes", "What causes Hypoglycemia in newborns?",
         "Low blood sugar in newborns can happen when the mother has diabetes, when the baby is premature or small, or because of infection or rare metabolic disorders."),
        ("DISEASE/Prevention", "How to prevent Hypoglycemia in newborns?",
         "Good control of blood sugar during pregnancy and early feeding after birth help prevent low blood sugar in newborns."),
    ]),
    ("Dementia", ["Major neurocognitive disorder"], "MedlinePlus", [
        ("DISEASE/Inheritance", "Is Dementia inherited?",
         "Most forms of dementia are not inherited directly, but some rare types run in families because of gene changes."),
        ("DISEASE/Causes", "What causes Dementia?",
         "Dementia is caused by damage to brain cells. Alzheimer disease, strokes and other brain disorders are common causes."),
    ]),
    ("Appendicitis", [], "MedlinePlus", [
        ("DISEASE/Symptoms", "What are the symptoms of Appendicitis?",
         "Symptoms include pain that starts near the belly button and moves to the lower right abdomen, loss of appetite, nausea and a low fever."),
        ("DISEASE/Treatment", "What are the treatments for Appendicitis?",
         "Appendicitis is usually treated with surgery to remove the appendix, along with antibiotics."),
    ]),
    ("Trisomy 13", ["Patau syndrome"], "GHR", [
        ("DISEASE/Information", "What is Trisomy 13?",
         "Trisomy 13 is a chromosomal condition with severe intellectual disability and heart, brain and other organ defects, caused by an extra copy of chromosome 13."),
        ("DISEASE/Diagnosis", "How to diagnose Trisomy 13?",
         "The condition can be detected before birth by screening tests and confirmed by chromosome analysis of the baby or the pregnancy."),
    ]),
    ("Metformin", ["Glucophage"], "MedlinePlus Drugs", [
        ("DRUG/SideEffects", "What are the side effects of Metformin?",
         "Common side effects include diarrhea, nausea, stomach upset and a metallic taste. A rare but serious side effect is lactic acidosis."),
        ("DRUG/Dose", "What is the dosage of Metformin?",
         "Doses are set by the doctor and are usually increased slowly. The maximum daily dose of regular tablets is 2,550 mg split into several doses."),
    ]),
    ("Amlodipine", ["Norvasc"], "MedlinePlus Drugs", [
        ("DRUG/SideEffects", "What are the side effects of Amlodipine?",
         "Side effects include swelling of the ankles or feet, tiredness, flushing, dizziness and a fast or pounding heartbeat."),
        ("DRUG/Usage", "How should Amlodipine be used?",
         "Amlodipine is taken by mouth once a day. Do not stop taking it without talking to your doctor."),
    ]),
    ("Simvastatin", ["Zocor"], "MedlinePlus Drugs", [
        ("DRUG/Usage", "How should Simvastatin be used?",
         "Simvastatin is usually taken once a day in the evening, because the body makes more cholesterol at night."),
    ]),
    ("Hydrogen peroxide", [], "MedlinePlus Drugs", [
        ("DRUG/StorageDisposal", "What should I know about storage and disposal of Hydrogen peroxide?",
         "Keep the product in its container, away from heat and light. Dispose of expired product through a medicine take-back program."),
    ]),
    ("Shingles vaccine", ["Zoster vaccine", "Recombinant zoster vaccine"], "MedlinePlus Drugs", [
        ("DRUG/WhyGetVaccinated", "Why get vaccinated with the Shingles vaccine?",
         "The vaccine protects against shingles and the long lasting nerve pain it can cause. Adults 50 years and older should get it even if they had chickenpox."),
    ]),
    ("Loperamide", ["Imodium"], "MedlinePlus Drugs", [
        ("DRUG/Indication", "Who should get Loperamide and why is it prescribed?",
         "Loperamide is used to control diarrhea, including chronic diarrhea in people with inflammatory bowel disease."),
    ]),
    ("Vitamin D", ["Cholecalciferol", "Ergocalciferol"], "MedlinePlus Herbs and Supplements", [
        ("DRUG/SideEffects", "What are the side effects of Vitamin D?",
         "Vitamin D is safe at usual doses. Taking too much for a long time can raise blood calcium and cause weakness, nausea and kidney problems."),
    ]),
    ("Diverticulitis", ["Diverticular disease"], "NIDDK", [
        ("DISEASE/Diagnosis", "How to diagnose Diverticulitis?",
         "Doctors use a medical history, physical exam, blood tests and a CT scan of the abdomen to diagnose diverticulitis."),
        ("DISEASE/Frequency", "How many people are affected by Diverticulitis?",
         "Diverticulosis is common and becomes more common with age, but only a small share of people with it develop diverticulitis."),
    ]),
    ("Uveitis", [], "NEI", [
        ("DISEASE/Causes", "What causes Uveitis?",
         "Uveitis can be caused by autoimmune disorders, infections, eye injury or toxins, but often the cause is unknown."),
    ]),
    ("Coronary Artery Bypass Surgery", ["CABG", "Heart bypass surgery"], "NHLBI", [
        ("OTHER/Information", "What is Coronary Artery Bypass Surgery?",
         "Coronary artery bypass surgery uses a healthy blood vessel from elsewhere in the body to bypass a blocked coronary artery and improve blood flow to the heart."),
    ]),
    ("Liver Function Tests", ["LFTs", "Hepatic function panel"], "NHLBI", [
        ("OTHER/Information", "What are Liver Function Tests?",
         "Liver function tests are blood tests that measure enzymes, proteins and bilirubin to check how well the liver is working."),
    ]),
]


def main(out):
    pairs = []
    for focus, synonyms, source, qas in TOPICS:
        for qtype, question, answer in qas:
            pairs.append({
                "id": f"S{len(pairs) + 1:03d}", "question": question, "answer": answer,
                "focus": {"focus": focus, "synonyms": synonyms},
                "question_type": qtype, "source": source,
            })
    assert len(pairs) == 50, len(pairs)
    doc = {"format": "rqeqa-collection", "version": 1, "pairs": pairs}
    with open(out, "w", encoding="utf-8") as f:
        f.write(json.dumps(doc, ensure_ascii=False, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
